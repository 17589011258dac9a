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

#include "motrack/scheduler.h"

#include <cstdint>
#include <random>
#include <sstream>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "motrack/error.h"
#include "oracles.h"

namespace motrack {
namespace {

using ::testing::Each;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

ClipStats Stats(double e, double s, double f, bool init = true) {
  return ClipStats{e, s, f, init};
}

TEST(SchedulerConfigTest, Defaults) {
  const SchedulerConfig c;
  EXPECT_EQ(c.alpha, 0.1);
  EXPECT_EQ(c.beta, 0.05);
  EXPECT_EQ(c.w, 0.5);
  EXPECT_EQ(c.c, 0.5);
  EXPECT_EQ(c.gamma, 1.0);
  EXPECT_EQ(c.temperature, 1.0);
  EXPECT_EQ(c.eps_explore, 0.1);
  EXPECT_EQ(c.eps_num, 1e-6);
  EXPECT_NO_THROW(c.Validate());
}

TEST(SchedulerConfigTest, RejectsOutOfRangeValues) {
  SchedulerConfig c;
  c.w = 1.5;
  EXPECT_THROW(c.Validate(), ValidationError);
  c = {};
  c.temperature = 0.0;
  EXPECT_THROW(c.Validate(), ValidationError);
  c = {};
  c.eps_explore = -0.1;
  EXPECT_THROW(c.Validate(), ValidationError);
}

// ---- update_error ----

TEST(UpdateErrorTest, ZeroRateKeepsError) {
  EXPECT_EQ(UpdateError(Stats(0.3, 0, 0), 0.9, 0.0).error, 0.3);
}

TEST(UpdateErrorTest, FixedPoint) {
  EXPECT_EQ(UpdateError(Stats(0.3, 0, 0), 0.3, 0.4).error, 0.3);
}

TEST(UpdateErrorTest, HandExample) {
  EXPECT_DOUBLE_EQ(UpdateError(Stats(0.5, 0, 0), 1.0, 0.1).error, 0.55);
}

TEST(UpdateErrorTest, FirstObservationSetsError) {
  const ClipStats s = UpdateError(ClipStats{}, 0.8, 0.1);
  EXPECT_EQ(s.error, 0.8);
  EXPECT_TRUE(s.initialized);
}

TEST(UpdateErrorTest, NegativeErrorThrows) {
  EXPECT_THROW(UpdateError(ClipStats{}, -0.1, 0.1), ValidationError);
}

// ---- update_outcome ----

TEST(UpdateOutcomeTest, ZeroRateKeepsCounts) {
  const ClipStats s = UpdateOutcome(Stats(0, 0.4, 0.6), true, 0.0);
  EXPECT_EQ(s.success, 0.4);
  EXPECT_EQ(s.failure, 0.6);
}

TEST(UpdateOutcomeTest, FullRateSuccess) {
  const ClipStats s = UpdateOutcome(Stats(0, 0, 0), true, 1.0);
  EXPECT_EQ(s.success, 1.0);
  EXPECT_EQ(s.failure, 0.0);
}

TEST(UpdateOutcomeTest, HandExampleFailure) {
  const ClipStats s = UpdateOutcome(Stats(0, 0.4, 0.6), false, 0.5);
  EXPECT_DOUBLE_EQ(s.success, 0.2);
  EXPECT_DOUBLE_EQ(s.failure, 0.8);
}

// ---- success_prob ----

TEST(SuccessProbTest, Examples) {
  EXPECT_EQ(SuccessProb(Stats(0, 0, 0), 1e-6), 0.0);
  EXPECT_NEAR(SuccessProb(Stats(0, 2, 2), 1e-6), 0.5, 1e-6);
  EXPECT_NEAR(SuccessProb(Stats(0, 3, 1), 1e-8), 0.75, 1e-8);
}

// ---- difficulty_score ----

TEST(DifficultyScoreTest, Examples) {
  SchedulerConfig c;
  c.w = 0.0;
  EXPECT_EQ(DifficultyScore(Stats(c.c, 0, 0), c), 1.0);

  c.w = 1.0;
  c.eps_num = 1e-300;
  EXPECT_NEAR(DifficultyScore(Stats(0.3, 1, 0), c), 0.0, 1e-15);

  // clip(E/c) = 0.4, success probability 0.9.
  c.w = 0.5;
  c.c = 0.5;
  EXPECT_NEAR(DifficultyScore(Stats(0.2, 0.9, 0.1), c), 0.25, 1e-6);
}

TEST(DifficultyScoreTest, ErrorAboveScaleSaturates) {
  SchedulerConfig c;
  c.w = 0.0;
  EXPECT_EQ(DifficultyScore(Stats(10.0, 0, 0), c), 1.0);
}

// ---- sampling_distribution ----

TEST(SamplingDistributionTest, EqualScoresAreUniform) {
  for (double t : {0.1, 1.0, 10.0}) {
    SchedulerConfig c;
    c.temperature = t;
    const std::vector<double> p = SamplingDistributionFromScores(
        std::vector<double>{0.3, 0.3, 0.3, 0.3}, c);
    for (double v : p) EXPECT_NEAR(v, 0.25, 1e-15);
  }
}

TEST(SamplingDistributionTest, FullExplorationIsUniform) {
  SchedulerConfig c;
  c.eps_explore = 1.0;
  const std::vector<double> p =
      SamplingDistributionFromScores(std::vector<double>{0.0, 0.5, 1.0}, c);
  for (double v : p) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
}

TEST(SamplingDistributionTest, ThreeClipExampleMatchesSoftmaxOracle) {
  SchedulerConfig c;
  c.gamma = 1.0;
  c.temperature = 1.0;
  c.eps_explore = 0.1;
  c.eps_num = 1e-6;
  const std::vector<double> r = {0.1, 0.2, 0.4};
  const std::vector<double> p = SamplingDistributionFromScores(r, c);
  const std::vector<double> want = testing::OracleDistribution(r, c);
  ASSERT_EQ(p.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(p[i], want[i], 1e-9);
  // With gamma = T = 1 the softmax of log(r) is r / sum(r).
  const double sum = 0.7 + 3e-6;
  EXPECT_NEAR(p[2], 0.9 * (0.4 + 1e-6) / sum + 0.1 / 3, 1e-12);
}

TEST(SamplingDistributionTest, FromStateUsesScores) {
  SchedulerState state({"a", "b"});
  state.mutable_stats(0) = Stats(0.4, 0.2, 0.8);
  state.mutable_stats(1) = Stats(0.1, 0.9, 0.1);
  const SchedulerConfig c;
  const std::vector<double> r = DifficultyScores(state, c);
  EXPECT_EQ(SamplingDistribution(state, c), SamplingDistributionFromScores(r, c));
  EXPECT_GT(r[0], r[1]);
}

TEST(SamplingDistributionTest, SingleClipIsCertain) {
  const std::vector<double> p =
      SamplingDistributionFromScores(std::vector<double>{0.7}, SchedulerConfig{});
  EXPECT_THAT(p, ElementsAre(1.0));
}

TEST(SamplingDistributionTest, EmptyThrows) {
  EXPECT_THROW(SamplingDistributionFromScores({}, SchedulerConfig{}),
               ValidationError);
}

// ---- sample_clips ----

TEST(SampleClipsTest, DegenerateDistribution) {
  const std::vector<double> w = {1.0, 0.0, 0.0};
  EXPECT_THAT(SampleClips(w, 50, 9), Each(0));
}

TEST(SampleClipsTest, SameSeedSameDraws) {
  const std::vector<double> w = {0.1, 0.2, 0.3, 0.4};
  EXPECT_EQ(SampleClips(w, 100, 42), SampleClips(w, 100, 42));
  EXPECT_NE(SampleClips(w, 100, 42), SampleClips(w, 100, 43));
}

TEST(SampleClipsTest, UniformFrequencies) {
  const std::vector<double> w(4, 0.25);
  const std::vector<int> draws = SampleClips(w, 100000, 1);
  std::vector<int> counts(4, 0);
  for (int d : draws) ++counts[d];
  for (int c : counts) EXPECT_NEAR(c / 100000.0, 0.25, 0.01);
}

// ---- batch update ----

TEST(UpdateBatchTest, EmptyBatchIsNoOp) {
  SchedulerState state({"a", "b"});
  const SchedulerState before = state;
  UpdateBatch(state, {}, {}, {}, SchedulerConfig{});
  EXPECT_EQ(state, before);
}

TEST(UpdateBatchTest, MatchesScalarUpdates) {
  SchedulerConfig c;
  SchedulerState state({"a", "b", "c"});
  state.mutable_stats(1) = Stats(0.3, 0.5, 0.2);
  const std::vector<int> idx = {1, 2};
  const std::vector<double> err = {0.6, 0.1};
  const std::vector<std::uint8_t> ok = {0, 1};
  UpdateBatch(state, idx, err, ok, c);
  const ClipStats b = UpdateOutcome(UpdateError(Stats(0.3, 0.5, 0.2), 0.6, c.alpha),
                                    false, c.beta);
  const ClipStats cc = UpdateOutcome(UpdateError(ClipStats{}, 0.1, c.alpha),
                                     true, c.beta);
  EXPECT_EQ(state.stats(1).error, b.error);
  EXPECT_EQ(state.stats(1).success, b.success);
  EXPECT_EQ(state.stats(1).failure, b.failure);
  EXPECT_EQ(state.stats(2).error, cc.error);
  EXPECT_EQ(state.stats(2).success, cc.success);
  EXPECT_FALSE(state.stats(0).initialized);
}

TEST(UpdateBatchTest, RepeatedClipIsPooled) {
  SchedulerConfig c;
  SchedulerState state({"a"});
  state.mutable_stats(0) = Stats(0.5, 0.0, 0.0);
  const std::vector<int> idx = {0, 0};
  const std::vector<double> err = {0.2, 0.4};
  const std::vector<std::uint8_t> ok = {1, 0};
  UpdateBatch(state, idx, err, ok, c);
  EXPECT_DOUBLE_EQ(state.stats(0).error, 0.9 * 0.5 + 0.1 * 0.3);
  EXPECT_DOUBLE_EQ(state.stats(0).success, c.beta * 0.5);
  EXPECT_DOUBLE_EQ(state.stats(0).failure, c.beta * 0.5);
}

TEST(UpdateBatchTest, LengthMismatchThrowsAndLeavesState) {
  SchedulerState state({"a", "b"});
  const SchedulerState before = state;
  const std::vector<int> idx = {0, 1};
  const std::vector<double> err = {0.1};
  const std::vector<std::uint8_t> ok = {1, 1};
  try {
    UpdateBatch(state, idx, err, ok, SchedulerConfig{});
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    EXPECT_THAT(e.what(), HasSubstr("equal length"));
  }
  EXPECT_EQ(state, before);
}

TEST(UpdateBatchTest, BadIndexThrowsAndLeavesState) {
  SchedulerState state({"a"});
  const SchedulerState before = state;
  const std::vector<int> idx = {0, 3};
  const std::vector<double> err = {0.1, 0.2};
  const std::vector<std::uint8_t> ok = {1, 1};
  EXPECT_THROW(UpdateBatch(state, idx, err, ok, SchedulerConfig{}), ValidationError);
  EXPECT_EQ(state, before);
}

// ---- checkpoint ----

TEST(CheckpointTest, RoundTripIsExact) {
  SchedulerState state({"walk", "jump"});
  state.mutable_stats(0) = Stats(0.123456789012345, 0.3, 0.7);
  state.mutable_stats(1) = Stats(0.0, 0.0, 0.0, false);
  std::stringstream text;
  WriteCheckpoint(state, text);
  EXPECT_EQ(ReadCheckpoint(text, "ckpt"), state);
}

TEST(CheckpointTest, MalformedLineNamesLine) {
  std::istringstream text("walk 0.1 0.2\n");
  try {
    ReadCheckpoint(text, "ckpt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "line 1");
  }
}

}  // namespace
}  // namespace motrack
