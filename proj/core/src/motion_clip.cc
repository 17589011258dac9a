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

#include "motrack/motion_clip.h"

#include <cmath>
#include <sstream>

#include "motrack/error.h"
#include "motrack/geometry.h"

namespace motrack {
namespace {

bool AllFinite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

bool AllFinite(const std::vector<Vec3>& v) {
  for (const Vec3& x : v) {
    if (!x.allFinite()) return false;
  }
  return true;
}

template <std::size_t N>
bool AllFinite(const std::array<double, N>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

class ViolationSink {
 public:
  void Add(int frame, std::string field, std::string message) {
    out_.push_back({frame, std::move(field), std::move(message)});
  }
  std::vector<Violation> Take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

void CheckLayout(const MotionClip& clip, ViolationSink& sink) {
  const ClipLayout& layout = clip.layout;
  if (layout.kind == ClipKind::kHuman) {
    if (!clip.frames.empty()) {
      sink.Add(-1, "frames", "human clip carries robot frames");
    }
    return;
  }
  if (!clip.human_frames.empty()) {
    sink.Add(-1, "frames", "robot clip carries human frames");
  }
  if (layout.num_bodies < 1) {
    sink.Add(-1, "bodies", "need at least one body");
    return;
  }
  if (layout.anchor_index < 0 || layout.anchor_index >= layout.num_bodies) {
    sink.Add(-1, "anchor", "anchor index outside body range");
  }
  if (static_cast<int>(layout.body_names.size()) != layout.num_bodies) {
    sink.Add(-1, "body_names", "expected one name per body");
  }
  for (int k : layout.key_bodies) {
    if (k < 0 || k >= layout.num_bodies) {
      sink.Add(-1, "key_bodies", "key body index outside body range");
      break;
    }
  }
}

void CheckRobotFrame(const MotionClip& clip, int f, ViolationSink& sink) {
  const ClipLayout& layout = clip.layout;
  const RobotFrame& fr = clip.frames[f];
  const auto n = static_cast<std::size_t>(layout.num_bodies);

  if (fr.joint_pos.size() != kNumJoints) {
    sink.Add(f, "joint_pos", "expected 29 joint positions");
  } else if (!AllFinite(fr.joint_pos)) {
    sink.Add(f, "joint_pos", "non-finite joint position");
  }
  const std::size_t want_vel = layout.has_joint_vel ? kNumJoints : 0;
  if (fr.joint_vel.size() != want_vel) {
    sink.Add(f, "joint_vel", "joint velocity width does not match layout");
  } else if (!AllFinite(fr.joint_vel)) {
    sink.Add(f, "joint_vel", "non-finite joint velocity");
  }

  if (fr.body_positions.size() != n) {
    sink.Add(f, "body_pos", "body position count does not match layout");
  } else if (!AllFinite(fr.body_positions)) {
    sink.Add(f, "body_pos", "non-finite body position");
  }
  if (fr.body_orientations.size() != n) {
    sink.Add(f, "body_quat", "body orientation count does not match layout");
  } else {
    for (std::size_t b = 0; b < n; ++b) {
      if (!IsUnitQuaternion(fr.body_orientations[b])) {
        std::ostringstream msg;
        msg << "body " << b;
        if (b < layout.body_names.size()) {
          msg << " (" << layout.body_names[b] << ")";
        }
        msg << " quaternion norm " << fr.body_orientations[b].coeffs().norm()
            << " is not unit";
        sink.Add(f, "body_quat", msg.str());
      }
    }
  }
  const std::size_t want_body_vel = layout.has_body_vel ? n : 0;
  if (fr.body_lin_vel.size() != want_body_vel) {
    sink.Add(f, "body_lin_vel", "body velocity count does not match layout");
  } else if (!AllFinite(fr.body_lin_vel)) {
    sink.Add(f, "body_lin_vel", "non-finite body linear velocity");
  }
  if (fr.body_ang_vel.size() != want_body_vel) {
    sink.Add(f, "body_ang_vel", "body velocity count does not match layout");
  } else if (!AllFinite(fr.body_ang_vel)) {
    sink.Add(f, "body_ang_vel", "non-finite body angular velocity");
  }
  if (fr.anchor_index != layout.anchor_index) {
    sink.Add(f, "anchor", "frame anchor index differs from layout");
  }
}

}  // namespace

ClipLayout ClipLayout::Robot(int num_bodies) {
  ClipLayout layout;
  layout.kind = ClipKind::kRobot;
  layout.num_bodies = num_bodies;
  if (num_bodies == kDefaultNumBodies) {
    layout.body_names = DefaultBodyNames();
    layout.key_bodies = DefaultKeyBodies();
  } else {
    for (int b = 0; b < num_bodies; ++b) {
      layout.body_names.push_back("body_" + std::to_string(b));
    }
  }
  return layout;
}

ClipLayout ClipLayout::Human() {
  ClipLayout layout;
  layout.kind = ClipKind::kHuman;
  layout.num_bodies = 0;
  layout.has_joint_vel = false;
  layout.has_body_vel = false;
  return layout;
}

const std::vector<std::string>& DefaultBodyNames() {
  static const std::vector<std::string> kNames = {
      "pelvis",         "left_knee",   "left_ankle",     "right_knee",
      "right_ankle",    "torso",       "head",           "left_shoulder",
      "left_elbow",     "left_wrist",  "right_shoulder", "right_elbow",
      "right_wrist"};
  return kNames;
}

const std::vector<int>& DefaultKeyBodies() {
  static const std::vector<int> kKeys = {6, 9, 12, 2, 4, 1, 3};
  return kKeys;
}

std::string Violation::ToString() const {
  std::ostringstream out;
  if (frame >= 0) out << "frame " << frame << ": ";
  out << field << ": " << message;
  return out.str();
}

std::vector<Violation> ValidateClip(const MotionClip& clip) {
  ViolationSink sink;
  if (clip.name.empty()) sink.Add(-1, "name", "empty clip name");
  if (!std::isfinite(clip.fps) || clip.fps <= 0.0) {
    sink.Add(-1, "fps", "fps must be positive and finite");
  }
  if (clip.difficulty < kMinDifficulty || clip.difficulty > kMaxDifficulty) {
    sink.Add(-1, "difficulty",
             "difficulty " + std::to_string(clip.difficulty) +
                 " outside 1..10");
  }
  if (clip.num_frames() == 0) sink.Add(-1, "frames", "clip has no frames");
  CheckLayout(clip, sink);

  if (clip.layout.kind == ClipKind::kHuman) {
    for (std::size_t f = 0; f < clip.human_frames.size(); ++f) {
      const HumanMotionFrame& fr = clip.human_frames[f];
      if (!AllFinite(fr.pose)) {
        sink.Add(static_cast<int>(f), "pose", "non-finite pose value");
      }
      if (!AllFinite(fr.translation)) {
        sink.Add(static_cast<int>(f), "trans", "non-finite translation");
      }
    }
  } else if (clip.layout.num_bodies >= 1) {
    for (std::size_t f = 0; f < clip.frames.size(); ++f) {
      CheckRobotFrame(clip, static_cast<int>(f), sink);
    }
  }
  return sink.Take();
}

MotionClip FiniteDifferenceVelocities(const MotionClip& clip) {
  if (clip.layout.kind != ClipKind::kRobot) {
    throw ValidationError(clip.name +
                          ": human-space clips carry no velocity fields");
  }
  const std::size_t t_count = clip.frames.size();
  if (t_count < 2) {
    throw ValidationError(clip.name +
                          ": finite differences need at least 2 frames");
  }
  const auto n = static_cast<std::size_t>(clip.layout.num_bodies);
  for (const RobotFrame& fr : clip.frames) {
    if (fr.joint_pos.size() != clip.frames[0].joint_pos.size() ||
        fr.body_positions.size() != n || fr.body_orientations.size() != n) {
      throw ValidationError(clip.name +
                            ": frames do not share one position layout");
    }
  }
  MotionClip out = clip;
  out.layout.has_joint_vel = true;
  out.layout.has_body_vel = true;
  const double fps = clip.fps;

  for (std::size_t t = 0; t < t_count; ++t) {
    // Forward difference; the last frame reuses the previous interval.
    const std::size_t a = t + 1 < t_count ? t : t - 1;
    const RobotFrame& f0 = clip.frames[a];
    const RobotFrame& f1 = clip.frames[a + 1];
    RobotFrame& dst = out.frames[t];

    dst.joint_vel.resize(f0.joint_pos.size());
    for (std::size_t j = 0; j < f0.joint_pos.size(); ++j) {
      dst.joint_vel[j] = (f1.joint_pos[j] - f0.joint_pos[j]) * fps;
    }
    dst.body_lin_vel.resize(n);
    dst.body_ang_vel.resize(n);
    for (std::size_t b = 0; b < n; ++b) {
      dst.body_lin_vel[b] = (f1.body_positions[b] - f0.body_positions[b]) * fps;
      dst.body_ang_vel[b] = AngularVelocityBetween(
          f0.body_orientations[b], f1.body_orientations[b], fps);
    }
  }
  return out;
}

RobotFrame ZeroRobotFrame(int num_bodies) {
  RobotFrame fr;
  fr.joint_pos.assign(kNumJoints, 0.0);
  fr.joint_vel.assign(kNumJoints, 0.0);
  fr.body_positions.assign(num_bodies, Vec3::Zero());
  fr.body_orientations.assign(num_bodies, Quat::Identity());
  fr.body_lin_vel.assign(num_bodies, Vec3::Zero());
  fr.body_ang_vel.assign(num_bodies, Vec3::Zero());
  return fr;
}

}  // namespace motrack
