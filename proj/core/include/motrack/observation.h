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

#ifndef MOTRACK_OBSERVATION_H_
#define MOTRACK_OBSERVATION_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "motrack/motion_clip.h"

namespace motrack {

inline constexpr int kTargetFrameDims = 65;
inline constexpr int kShortHorizonFrames = 2;
inline constexpr int kLongHorizonFrames = 5;
inline constexpr int kCommandDims =
    kTargetFrameDims * (1 + kShortHorizonFrames + kLongHorizonFrames);
inline constexpr int kProprioDims = 6 + 3 + 3 * kNumJoints;
inline constexpr int kObservationDims = kCommandDims + kProprioDims;
static_assert(kCommandDims == 520);
static_assert(kObservationDims == 616);

struct Segment {
  std::string_view name;
  int offset;
  int width;
};

// Actor observation segments in order; they partition [0, 616).
inline constexpr std::array<Segment, 8> kObservationSegments = {{
    {"current_target", 0, 65},
    {"short_future_targets", 65, 130},
    {"long_future_targets", 195, 325},
    {"motion_anchor_ori_b", 520, 6},
    {"base_ang_vel", 526, 3},
    {"joint_pos", 529, 29},
    {"joint_vel", 558, 29},
    {"prev_actions", 587, 29},
}};

// Layout of one 65-wide target frame. Key-body positions are expressed in
// the anchor frame; the rest is world frame.
inline constexpr std::array<Segment, 6> kTargetFrameSegments = {{
    {"joint_pos", 0, 29},
    {"anchor_pos", 29, 3},
    {"anchor_ori_6d", 32, 6},
    {"anchor_lin_vel", 38, 3},
    {"anchor_ang_vel", 41, 3},
    {"key_body_pos", 44, 21},
}};

// First two columns of the rotation matrix of `q`, column-major. Throws
// ValidationError on a non-unit quaternion.
std::array<double, 6> QuatTo6d(const Quat& q);

using TargetFrame = std::array<double, kTargetFrameDims>;

// Target frame for frame `t` of a robot clip with 7 key bodies.
TargetFrame MakeTargetFrame(const MotionClip& clip, std::size_t t);

struct CommandOptions {
  int long_stride = 5;  // frames between long-horizon targets
};

// Current target, the next 2 frames, then 5 frames spaced `long_stride`
// apart. Indices past the end clamp to the last frame.
std::vector<double> BuildCommand(const MotionClip& clip, std::size_t t,
                                 const CommandOptions& options = {});

struct Proprioception {
  std::vector<double> anchor_ori_6d = std::vector<double>(6, 0.0);
  std::vector<double> base_ang_vel = std::vector<double>(3, 0.0);
  std::vector<double> joint_pos = std::vector<double>(kNumJoints, 0.0);
  std::vector<double> joint_vel = std::vector<double>(kNumJoints, 0.0);
  std::vector<double> prev_actions = std::vector<double>(kNumJoints, 0.0);
};

class ObservationVector {
 public:
  ObservationVector() { values_.fill(0.0); }

  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }
  // Throws std::out_of_range for unknown segment names.
  std::span<const double> segment(std::string_view name) const;

  static constexpr std::size_t size() { return kObservationDims; }

 private:
  std::array<double, kObservationDims> values_;
};

// Command followed by the proprioceptive segments. Throws ShapeError naming
// the segment whose width is wrong.
ObservationVector BuildObservation(const MotionClip& clip, std::size_t t,
                                   const Proprioception& proprio,
                                   const CommandOptions& options = {});

// "name offset width" per line, observation segments then target-frame
// segments.
void WriteObservationManifest(std::ostream& out);

}  // namespace motrack

#endif  // MOTRACK_OBSERVATION_H_
