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

#ifndef MOTRACK_SIM_HARNESS_H_
#define MOTRACK_SIM_HARNESS_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "motrack/curriculum.h"
#include "motrack/motion_library.h"
#include "motrack/scheduler.h"

namespace motrack {

// Stand-in for simulator + policy: a clip's tracking error decays
// geometrically with the number of episodes trained on it.
struct LearnerModel {
  // Initial error per difficulty level (m); index 0 unused.
  std::array<double, kNumLevels + 1> base_error{};
  double learn_rate = 0.02;  // fractional error decay per exposure
  double noise_std = 0.01;   // Gaussian observation noise (m)
  double fail_threshold = 0.5;
  // MPJAE proxy reported to the curriculum = error * angle_per_meter.
  double angle_per_meter = 2.0;

  // base_error(l) = intercept + slope * l.
  static LearnerModel Linear(double intercept = 0.0, double slope = 0.1);

  void Validate() const;
};

struct LearnerOutcome {
  double error = 0.0;
  bool success = true;
};

// error = base_error(level) (1 - learn_rate)^exposure + noise, clamped at 0.
LearnerOutcome StepLearner(const LearnerModel& model, int level,
                           std::int64_t exposure, std::mt19937_64& rng);

enum class SamplingMode { kAdaptive, kUniform };

struct RunConfig {
  SchedulerConfig scheduler;
  CurriculumConfig curriculum;
  LearnerModel learner = LearnerModel::Linear();
  int iterations = 1000;
  int batch_size = 16;
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::kAdaptive;

  void Validate() const;
};

struct IterationRecord {
  int iteration = 0;
  // Curriculum frontier and ramp used to sample this iteration.
  int l_max = 1;
  double ramp_progress = 1.0;
  // Outcome of the curriculum tick that closed the iteration.
  AdvanceReason reason = AdvanceReason::kNone;
  std::vector<int> samples;         // draws per clip
  std::vector<double> error;        // E after the update
  std::vector<double> score;        // r after the update
  std::vector<double> probability;  // weights used for sampling
  std::array<double, kNumLevels + 1> level_mass{};
  double mpjpe_proxy = 0.0;  // mean E over sampled-so-far unlocked clips
};

struct RunLog {
  std::vector<std::string> clip_names;
  std::vector<int> levels;
  std::vector<IterationRecord> records;
  SchedulerState final_state;
  CurriculumState final_curriculum;
  std::vector<std::int64_t> exposures;
};

RunLog Run(std::vector<std::string> clip_names, std::vector<int> levels,
           const RunConfig& cfg);
RunLog Run(const MotionLibrary& library, const RunConfig& cfg);

struct RunSummary {
  int final_l_max = 1;
  // Final per-clip errors: the EMA for sampled clips, the untrained learner
  // error for clips never sampled.
  double mean_error = 0.0;
  double max_error = 0.0;
};

std::vector<double> FinalClipErrors(const RunLog& log,
                                    const LearnerModel& learner);
RunSummary Summarize(const RunLog& log, const LearnerModel& learner);

// Per (iteration, clip): iteration,clip,level,samples,E,r,p.
void WriteRunCsv(const RunLog& log, std::ostream& out);
// Per iteration: iteration,l_max,reason,ramp_progress,mass_1..mass_10,
// mpjpe_proxy.
void WriteCurriculumCsv(const RunLog& log, std::ostream& out);

// Returns a description of each broken run invariant: l_max monotone and
// within 1..10, weights summing to 1, locked clips at zero mass and the
// per-level floor on unlocked levels.
std::vector<std::string> CheckRunInvariants(const RunLog& log,
                                            const RunConfig& cfg);

struct ComparisonRow {
  std::uint64_t seed = 0;
  RunSummary adaptive;
  RunSummary uniform;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  int adaptive_wins = 0;  // seeds where adaptive max error is strictly lower
  double win_rate = 0.0;
};

// Runs the configured scheduler against uniform sampling (same curriculum,
// learner and seed) for each seed. Needs at least 2 seeds.
ComparisonReport CompareUniform(const std::vector<std::string>& clip_names,
                                const std::vector<int>& levels,
                                const RunConfig& cfg,
                                std::span<const std::uint64_t> seeds);

void WriteComparisonCsv(const ComparisonReport& report, std::ostream& out);

}  // namespace motrack

#endif  // MOTRACK_SIM_HARNESS_H_
