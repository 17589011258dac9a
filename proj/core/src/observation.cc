// Copyright 2026 The motrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "motrack/observation.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "motrack/error.h"
#include "motrack/geometry.h"

namespace motrack {
namespace {

const Segment& FindSegment(std::string_view name) {
  for (const Segment& s : kObservationSegments) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("unknown observation segment '" + std::string(name) +
                          "'");
}

void Place(std::span<double> dst, const Segment& seg,
           std::span<const double> src) {
  if (static_cast<int>(src.size()) != seg.width) {
    throw ShapeError("observation segment " + std::string(seg.name) +
                     " expects " + std::to_string(seg.width) +
                     " values, got " + std::to_string(src.size()));
  }
  std::copy(src.begin(), src.end(), dst.begin() + seg.offset);
}

}  // namespace

std::array<double, 6> QuatTo6d(const Quat& q) {
  if (!IsUnitQuaternion(q)) {
    throw ValidationError("6D rotation needs a unit quaternion");
  }
  const Eigen::Matrix3d r = RotationMatrix(q);
  return {r(0, 0), r(1, 0), r(2, 0), r(0, 1), r(1, 1), r(2, 1)};
}

TargetFrame MakeTargetFrame(const MotionClip& clip, std::size_t t) {
  if (clip.layout.kind != ClipKind::kRobot) {
    throw ValidationError(clip.name + ": targets need a robot clip");
  }
  if (t >= clip.frames.size()) {
    throw ValidationError(clip.name + ": frame index " + std::to_string(t) +
                          " out of range");
  }
  if (static_cast<int>(clip.layout.key_bodies.size()) != kNumKeyBodies) {
    throw ValidationError(clip.name + ": target frames need 7 key bodies");
  }
  const RobotFrame& fr = clip.frames[t];
  if (fr.joint_pos.size() != kNumJoints || fr.body_lin_vel.empty()) {
    throw ValidationError(clip.name + ": frame lacks joint or velocity data");
  }
  const int a = fr.anchor_index;
  const Vec3& pa = fr.body_positions[a];
  const Quat& qa = fr.body_orientations[a];

  TargetFrame out{};
  auto it = out.begin();
  it = std::copy(fr.joint_pos.begin(), fr.joint_pos.end(), it);
  for (int k = 0; k < 3; ++k) *it++ = pa[k];
  const std::array<double, 6> ori = QuatTo6d(qa);
  it = std::copy(ori.begin(), ori.end(), it);
  for (int k = 0; k < 3; ++k) *it++ = fr.body_lin_vel[a][k];
  for (int k = 0; k < 3; ++k) *it++ = fr.body_ang_vel[a][k];
  for (int body : clip.layout.key_bodies) {
    const Vec3 rel = ToBodyFrame(qa, fr.body_positions[body] - pa);
    for (int k = 0; k < 3; ++k) *it++ = rel[k];
  }
  return out;
}

std::vector<double> BuildCommand(const MotionClip& clip, std::size_t t,
                                 const CommandOptions& options) {
  if (clip.num_frames() == 0) {
    throw ValidationError(clip.name + ": empty clip");
  }
  if (t >= clip.num_frames()) {
    throw ValidationError(clip.name + ": frame index " + std::to_string(t) +
                          " out of range");
  }
  if (options.long_stride < 1) {
    throw ValidationError("long-horizon stride must be >= 1");
  }
  const std::size_t last = clip.num_frames() - 1;
  std::vector<std::size_t> slots = {t};
  for (int k = 1; k <= kShortHorizonFrames; ++k) slots.push_back(t + k);
  for (int k = 1; k <= kLongHorizonFrames; ++k) {
    slots.push_back(t + static_cast<std::size_t>(k * options.long_stride));
  }
  std::vector<double> out;
  out.reserve(kCommandDims);
  for (std::size_t idx : slots) {
    const TargetFrame f = MakeTargetFrame(clip, std::min(idx, last));
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::span<const double> ObservationVector::segment(
    std::string_view name) const {
  const Segment& s = FindSegment(name);
  return std::span<const double>(values_).subspan(s.offset, s.width);
}

ObservationVector BuildObservation(const MotionClip& clip, std::size_t t,
                                   const Proprioception& proprio,
                                   const CommandOptions& options) {
  ObservationVector obs;
  std::span<double> dst = obs.mutable_values();
  const std::vector<double> command = BuildCommand(clip, t, options);
  std::copy(command.begin(), command.end(), dst.begin());
  Place(dst, FindSegment("motion_anchor_ori_b"), proprio.anchor_ori_6d);
  Place(dst, FindSegment("base_ang_vel"), proprio.base_ang_vel);
  Place(dst, FindSegment("joint_pos"), proprio.joint_pos);
  Place(dst, FindSegment("joint_vel"), proprio.joint_vel);
  Place(dst, FindSegment("prev_actions"), proprio.prev_actions);
  return obs;
}

void WriteObservationManifest(std::ostream& out) {
  out << "# observation " << kObservationDims << '\n';
  for (const Segment& s : kObservationSegments) {
    out << s.name << ' ' << s.offset << ' ' << s.width << '\n';
  }
  out << "# target_frame " << kTargetFrameDims << '\n';
  for (const Segment& s : kTargetFrameSegments) {
    out << "target." << s.name << ' ' << s.offset << ' ' << s.width << '\n';
  }
}

}  // namespace motrack
