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

#ifndef MOTRACK_TESTS_SUPPORT_FIXTURES_H_
#define MOTRACK_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <random>
#include <string>

#include "motrack/motion_clip.h"

namespace motrack::testing {

// Uniform on the unit 3-sphere, scalar part made non-negative.
Quat RandomUnitQuat(std::mt19937_64& rng);
Vec3 RandomVec3(std::mt19937_64& rng, double scale);
double Uniform(std::mt19937_64& rng, double lo, double hi);

// Fully populated robot frame with random state.
RobotFrame RandomRobotFrame(std::mt19937_64& rng,
                            int num_bodies = kDefaultNumBodies);

MotionClip RandomRobotClip(std::mt19937_64& rng, int frames,
                           const std::string& name = "random",
                           int difficulty = 1);
MotionClip ConstantRobotClip(const RobotFrame& frame, int frames,
                             const std::string& name = "constant");
MotionClip RandomHumanClip(std::mt19937_64& rng, int frames,
                           const std::string& name = "human");

// Robot clip whose anchor position x equals the frame index and whose
// first joint angle is 0.01 * frame, so each slot of a command is
// identifiable.
MotionClip RampClip(int frames);

// Fresh directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace motrack::testing

#endif  // MOTRACK_TESTS_SUPPORT_FIXTURES_H_
