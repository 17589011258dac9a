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

#include "fixtures.h"

#include <atomic>
#include <cmath>
#include <string>

namespace motrack::testing {

Quat RandomUnitQuat(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Quat q(n(rng), n(rng), n(rng), n(rng));
  q.normalize();
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  return q;
}

Vec3 RandomVec3(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return Vec3(u(rng), u(rng), u(rng));
}

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

RobotFrame RandomRobotFrame(std::mt19937_64& rng, int num_bodies) {
  RobotFrame f;
  for (int j = 0; j < kNumJoints; ++j) {
    f.joint_pos.push_back(Uniform(rng, -1.5, 1.5));
    f.joint_vel.push_back(Uniform(rng, -3.0, 3.0));
  }
  for (int b = 0; b < num_bodies; ++b) {
    f.body_positions.push_back(RandomVec3(rng, 1.0));
    f.body_orientations.push_back(RandomUnitQuat(rng));
    f.body_lin_vel.push_back(RandomVec3(rng, 2.0));
    f.body_ang_vel.push_back(RandomVec3(rng, 4.0));
  }
  return f;
}

MotionClip RandomRobotClip(std::mt19937_64& rng, int frames,
                           const std::string& name, int difficulty) {
  MotionClip clip;
  clip.name = name;
  clip.fps = 30.0;
  clip.difficulty = difficulty;
  clip.layout = ClipLayout::Robot();
  for (int t = 0; t < frames; ++t) clip.frames.push_back(RandomRobotFrame(rng));
  return clip;
}

MotionClip ConstantRobotClip(const RobotFrame& frame, int frames,
                             const std::string& name) {
  MotionClip clip;
  clip.name = name;
  clip.layout = ClipLayout::Robot(frame.num_bodies());
  clip.frames.assign(frames, frame);
  return clip;
}

MotionClip RandomHumanClip(std::mt19937_64& rng, int frames,
                           const std::string& name) {
  MotionClip clip;
  clip.name = name;
  clip.layout = ClipLayout::Human();
  for (int t = 0; t < frames; ++t) {
    HumanMotionFrame f;
    for (double& v : f.pose) v = Uniform(rng, -1.0, 1.0);
    for (double& v : f.translation) v = Uniform(rng, -2.0, 2.0);
    clip.human_frames.push_back(f);
  }
  return clip;
}

MotionClip RampClip(int frames) {
  MotionClip clip;
  clip.name = "ramp";
  clip.layout = ClipLayout::Robot();
  for (int t = 0; t < frames; ++t) {
    RobotFrame f = ZeroRobotFrame();
    f.body_positions[0] = Vec3(t, 0.0, 0.0);
    f.joint_pos[0] = 0.01 * t;
    clip.frames.push_back(f);
  }
  return clip;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("motrack_test_" + std::to_string(rd()) + "_" +
           std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace motrack::testing
