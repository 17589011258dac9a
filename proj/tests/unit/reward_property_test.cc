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

#include <random>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "motrack/reward.h"
#include "oracles.h"

namespace motrack {
namespace {

using testing::RandomRobotFrame;
using testing::RandomUnitQuat;
using testing::RandomVec3;
using testing::Uniform;

// A copy of `ref` with small errors on every field.
RobotFrame Perturb(std::mt19937_64& rng, const RobotFrame& ref, double scale) {
  RobotFrame act = ref;
  for (int i = 0; i < act.num_bodies(); ++i) {
    act.body_positions[i] += RandomVec3(rng, scale);
    const Vec3 axis = RandomVec3(rng, scale);
    act.body_orientations[i] =
        (ref.body_orientations[i] *
         Quat(Eigen::AngleAxisd(axis.norm(), axis.normalized())))
            .normalized();
    act.body_lin_vel[i] += RandomVec3(rng, scale);
    act.body_ang_vel[i] += RandomVec3(rng, scale);
  }
  return act;
}

std::array<double, 6> Terms(const TaskRewardTerms& t) {
  return {t.anchor_pos,   t.anchor_ori,   t.rel_body_pos,
          t.rel_body_ori, t.body_lin_vel, t.body_ang_vel};
}

std::array<double, 6> Weights(const RewardConfig& c) {
  return {c.anchor_pos.weight,   c.anchor_ori.weight,
          c.rel_body_pos.weight, c.rel_body_ori.weight,
          c.body_lin_vel.weight, c.body_ang_vel.weight};
}

TEST(RewardPropertyTest, TermsMatchOracle) {
  std::mt19937_64 rng(21);
  const RewardConfig cfg;
  for (int trial = 0; trial < 1000; ++trial) {
    const RobotFrame ref = RandomRobotFrame(rng);
    const RobotFrame act = Perturb(rng, ref, Uniform(rng, 0.0, 0.5));
    const auto got = Terms(TaskRewards(ref, act, cfg));
    const auto want = testing::OracleTaskTerms(ref, act, cfg);
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(got[k], want[k], 1e-9) << k;
  }
}

TEST(RewardPropertyTest, TermsLieInHalfOpenRange) {
  std::mt19937_64 rng(22);
  const RewardConfig cfg;
  const auto w = Weights(cfg);
  for (int trial = 0; trial < 500; ++trial) {
    const RobotFrame ref = RandomRobotFrame(rng);
    const RobotFrame act = Perturb(rng, ref, Uniform(rng, 0.0, 0.3));
    const auto t = Terms(TaskRewards(ref, act, cfg));
    for (int k = 0; k < 6; ++k) {
      EXPECT_GT(t[k], 0.0);
      EXPECT_LE(t[k], w[k]);
    }
  }
}

TEST(RewardPropertyTest, TermsDecreaseWithError) {
  std::mt19937_64 rng(23);
  const RewardConfig cfg;
  for (int trial = 0; trial < 200; ++trial) {
    const RobotFrame ref = RandomRobotFrame(rng);
    const RobotFrame small = Perturb(rng, ref, 0.05);
    // Scaling every positional and velocity error up increases each error.
    RobotFrame large = small;
    for (int i = 0; i < ref.num_bodies(); ++i) {
      large.body_lin_vel[i] = ref.body_lin_vel[i] +
                              2.0 * (small.body_lin_vel[i] - ref.body_lin_vel[i]);
      large.body_ang_vel[i] = ref.body_ang_vel[i] +
                              2.0 * (small.body_ang_vel[i] - ref.body_ang_vel[i]);
    }
    const int a = ref.anchor_index;
    large.body_positions[a] =
        ref.body_positions[a] +
        2.0 * (small.body_positions[a] - ref.body_positions[a]);
    const auto s = Terms(TaskRewards(ref, small, cfg));
    const auto l = Terms(TaskRewards(ref, large, cfg));
    EXPECT_LT(l[0], s[0]);
    EXPECT_LT(l[4], s[4]);
    EXPECT_LT(l[5], s[5]);
  }
  for (int k = 1; k < 50; ++k) {
    EXPECT_LT(Kernel(0.01 * (k + 1), 0.3), Kernel(0.01 * k, 0.3));
  }
}

TEST(RewardPropertyTest, QuatErrorIsAMetricUpToSign) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const Quat a = RandomUnitQuat(rng);
    const Quat b = RandomUnitQuat(rng);
    const Quat c = RandomUnitQuat(rng);
    const Quat neg_a(-a.w(), -a.x(), -a.y(), -a.z());
    const Quat neg_b(-b.w(), -b.x(), -b.y(), -b.z());
    const double ab = QuatError(a, b);
    EXPECT_NEAR(ab, QuatError(b, a), 1e-12);
    EXPECT_NEAR(ab, QuatError(neg_a, b), 1e-12);
    EXPECT_NEAR(ab, QuatError(a, neg_b), 1e-12);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, M_PI + 1e-12);
    EXPECT_NEAR(ab, testing::OracleGeodesic(a, b), 1e-6);
    EXPECT_LE(QuatError(a, c), ab + QuatError(b, c) + 1e-6);
  }
}

TEST(RewardPropertyTest, GlobalTranslationInvariance) {
  std::mt19937_64 rng(25);
  const RewardConfig cfg;
  for (int trial = 0; trial < 300; ++trial) {
    RobotFrame ref = RandomRobotFrame(rng);
    RobotFrame act = Perturb(rng, ref, 0.2);
    const auto before = Terms(TaskRewards(ref, act, cfg));
    const Vec3 shift = RandomVec3(rng, 100.0);
    for (Vec3& p : ref.body_positions) p += shift;
    for (Vec3& p : act.body_positions) p += shift;
    const auto after = Terms(TaskRewards(ref, act, cfg));
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(before[k], after[k], 1e-9) << k;
  }
}

TEST(RewardPropertyTest, RegularizationIsNonPositive) {
  std::mt19937_64 rng(26);
  const RewardConfig cfg;
  const char* bodies[] = {"left_ankle", "torso", "pelvis", "right_wrist",
                          "head"};
  for (int trial = 0; trial < 1000; ++trial) {
    ControlStep s;
    const int dofs = 1 + static_cast<int>(Uniform(rng, 0.0, 29.0));
    for (int j = 0; j < dofs; ++j) {
      s.action.push_back(Uniform(rng, -1.0, 1.0));
      s.prev_action.push_back(Uniform(rng, -1.0, 1.0));
      s.joint_pos.push_back(Uniform(rng, -2.0, 2.0));
      s.joint_limits.emplace_back(-1.5, 1.5);
    }
    for (const char* b : bodies) {
      s.contacts.push_back({b, Uniform(rng, 0.0, 5.0)});
    }
    const RegularizationTerms r = Regularization(s, cfg);
    EXPECT_LE(r.total, 0.0);
    const BodyStatePair pair{RandomRobotFrame(rng), RandomRobotFrame(rng)};
    EXPECT_GE(TotalReward(pair, s, cfg), r.total);
  }
}

}  // namespace
}  // namespace motrack
