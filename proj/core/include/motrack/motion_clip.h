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

#ifndef MOTRACK_MOTION_CLIP_H_
#define MOTRACK_MOTION_CLIP_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace motrack {

using Vec3 = Eigen::Vector3d;

// Orientation quaternion. Files store it scalar-first as (w, x, y, z). A body
// quaternion maps world-frame vectors into that body's frame.
using Quat = Eigen::Quaterniond;

inline constexpr int kNumJoints = 29;
inline constexpr int kSmplPoseDims = 66;
inline constexpr int kSmplTransDims = 3;
inline constexpr int kDefaultNumBodies = 13;
inline constexpr int kNumKeyBodies = 7;
inline constexpr int kMinDifficulty = 1;
inline constexpr int kMaxDifficulty = 10;
inline constexpr double kUnitNormTolerance = 1e-6;

// One SMPL frame: 22 joints of axis-angle pose plus the root translation.
struct HumanMotionFrame {
  std::array<double, kSmplPoseDims> pose{};
  std::array<double, kSmplTransDims> translation{};
};

// World-frame rigid-body state of the robot plus its joint state.
struct RobotFrame {
  std::vector<double> joint_pos;  // rad
  std::vector<double> joint_vel;  // rad/s
  std::vector<Vec3> body_positions;
  std::vector<Quat> body_orientations;
  std::vector<Vec3> body_lin_vel;
  std::vector<Vec3> body_ang_vel;
  int anchor_index = 0;

  int num_bodies() const { return static_cast<int>(body_positions.size()); }
};

enum class ClipKind { kRobot, kHuman };

// Describes which fields a clip carries and how its bodies are named.
struct ClipLayout {
  ClipKind kind = ClipKind::kRobot;
  int num_bodies = kDefaultNumBodies;
  int anchor_index = 0;
  std::vector<std::string> body_names;
  // Bodies whose anchor-relative positions enter the tracking command.
  std::vector<int> key_bodies;
  bool has_joint_vel = true;
  bool has_body_vel = true;

  static ClipLayout Robot(int num_bodies = kDefaultNumBodies);
  static ClipLayout Human();

  bool operator==(const ClipLayout&) const = default;
};

// Body names of the default 13-body tracking set; index 0 is the pelvis
// anchor.
const std::vector<std::string>& DefaultBodyNames();
// Head, wrists, ankles and knees of the default body set.
const std::vector<int>& DefaultKeyBodies();

struct MotionClip {
  std::string name;
  double fps = 30.0;
  int difficulty = kMinDifficulty;
  ClipLayout layout;
  std::vector<RobotFrame> frames;              // kRobot clips
  std::vector<HumanMotionFrame> human_frames;  // kHuman clips

  std::size_t num_frames() const {
    return layout.kind == ClipKind::kRobot ? frames.size()
                                           : human_frames.size();
  }
  double duration() const { return static_cast<double>(num_frames()) / fps; }
};

// One broken invariant. `frame` is -1 for clip-level problems.
struct Violation {
  int frame = -1;
  std::string field;
  std::string message;

  std::string ToString() const;
};

// Checks every clip invariant and reports all violations; never throws.
std::vector<Violation> ValidateClip(const MotionClip& clip);

// Returns a copy of a robot clip whose joint and body velocities are forward
// differences scaled by fps. The last frame repeats the previous velocity.
// Angular velocity is the world-frame rotation vector between consecutive
// orientations. Throws ValidationError for single-frame or human clips.
MotionClip FiniteDifferenceVelocities(const MotionClip& clip);

// Builds a robot frame with `num_bodies` bodies at the origin, identity
// orientations and zero joint state.
RobotFrame ZeroRobotFrame(int num_bodies = kDefaultNumBodies);

}  // namespace motrack

#endif  // MOTRACK_MOTION_CLIP_H_
