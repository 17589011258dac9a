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

#ifndef MOTRACK_REWARD_H_
#define MOTRACK_REWARD_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "motrack/motion_clip.h"

namespace motrack {

struct KernelTerm {
  double weight = 1.0;
  double sigma = 1.0;
};

enum class VelocityFrame { kWorld, kAnchor };

struct RewardConfig {
  KernelTerm anchor_pos{0.8, 0.2};
  KernelTerm anchor_ori{0.5, 0.4};
  KernelTerm rel_body_pos{1.0, 0.3};
  KernelTerm rel_body_ori{1.0, 0.4};
  KernelTerm body_lin_vel{1.0, 1.0};
  KernelTerm body_ang_vel{1.0, 3.14};
  double action_rate_weight = -0.1;
  double joint_limit_weight = -10.0;
  double contact_weight = -0.1;
  double contact_force_threshold = 1.0;  // N
  // Feet and hands may touch the ground.
  std::set<std::string> allowed_contact_bodies = {
      "left_ankle", "right_ankle", "left_wrist", "right_wrist"};
  VelocityFrame velocity_frame = VelocityFrame::kWorld;

  void Validate() const;
};

// Reference (target) state and the robot's actual state at one instant.
struct BodyStatePair {
  RobotFrame reference;
  RobotFrame actual;
};

struct ContactReading {
  std::string body;
  double force = 0.0;  // N
};

struct ControlStep {
  std::vector<double> action;
  std::vector<double> prev_action;
  std::vector<double> joint_pos;  // actual joint positions checked vs limits
  std::vector<std::pair<double, double>> joint_limits;
  std::vector<ContactReading> contacts;
};

struct TaskRewardTerms {
  double anchor_pos = 0.0;
  double anchor_ori = 0.0;
  double rel_body_pos = 0.0;
  double rel_body_ori = 0.0;
  double body_lin_vel = 0.0;
  double body_ang_vel = 0.0;
  double total = 0.0;

  std::map<std::string, double> Named() const;
};

struct RegularizationTerms {
  double action_rate = 0.0;
  double joint_limit = 0.0;
  double contacts = 0.0;
  double total = 0.0;

  std::map<std::string, double> Named() const;
};

// Geodesic angle between two unit quaternions, in [0, pi]; insensitive to
// the sign of either argument. Throws ValidationError on non-unit input.
double QuatError(const Quat& q1, const Quat& q2);

// exp(-d^2 / sigma^2).
double Kernel(double d, double sigma);

// Tracking terms. Anchor terms compare world-frame anchor poses; relative
// body terms compare non-anchor bodies expressed in their own side's anchor
// frame, with the mean squared error over bodies inside one kernel; velocity
// terms average over all bodies. Throws ShapeError on body count mismatch.
TaskRewardTerms TaskRewards(const RobotFrame& reference,
                            const RobotFrame& actual, const RewardConfig& cfg);
TaskRewardTerms TaskRewards(const BodyStatePair& pair, const RewardConfig& cfg);

RegularizationTerms Regularization(const ControlStep& step,
                                   const RewardConfig& cfg);

double TotalReward(const BodyStatePair& pair, const ControlStep& step,
                   const RewardConfig& cfg);

}  // namespace motrack

#endif  // MOTRACK_REWARD_H_
