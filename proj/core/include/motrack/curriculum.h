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

#ifndef MOTRACK_CURRICULUM_H_
#define MOTRACK_CURRICULUM_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "motrack/motion_clip.h"

namespace motrack {

inline constexpr int kNumLevels = kMaxDifficulty;

struct CurriculumConfig {
  bool enabled = true;
  double theta_pos = 0.12;  // MPJPE threshold (m)
  double theta_ang = 0.30;  // MPJAE threshold (rad)
  int auto_advance_iters = 2000;
  double w_new = 2.0;       // bias on the newest unlocked level
  double min_level_ratio = 0.05;
  int ramp_iters = 50;

  void Validate() const;
};

enum class AdvanceReason { kNone, kThresholds, kAuto };
std::string_view ToString(AdvanceReason reason);

struct LevelMetric {
  double mpjpe = 0.0;
  double mpjae = 0.0;
  std::size_t samples = 0;
};

// Metrics keyed by difficulty level (1..10).
using LevelMetrics = std::map<int, LevelMetric>;

struct CurriculumState {
  int l_max = 1;
  int iters_at_level = 0;
  int ramp_ticks = 0;
  // Fraction of the newest level's biased mass currently admitted.
  double ramp_progress = 1.0;
  // occupied[l] is true when the library holds clips at level l. Levels
  // without clips are skipped when advancing.
  std::array<bool, kNumLevels + 1> occupied = {false, true, true, true, true,
                                               true,  true, true, true, true,
                                               true};
  // Most recent metrics reported for each level.
  LevelMetrics level_metrics;
  AdvanceReason last_reason = AdvanceReason::kNone;
};

// Initial state for a library whose clips carry `clip_levels`. Training
// starts at the lowest level that holds clips, fully ramped in.
CurriculumState StartCurriculum(std::span<const int> clip_levels);

struct AdvanceDecision {
  bool advance = false;
  AdvanceReason reason = AdvanceReason::kNone;
};

// Threshold test on the l_max metrics, or the iteration cap. Never advances
// from the highest occupied level.
AdvanceDecision AdvanceCheck(const CurriculumState& state,
                             const CurriculumConfig& cfg, double mpjpe_at_lmax,
                             double mpjae_at_lmax);

// Scheduler probabilities adjusted for the curriculum: locked clips get 0,
// the newest level is scaled by ramp_progress * w_new, every unlocked level
// is lifted to at least min_level_ratio of the mass, and the result sums to
// 1. Throws ValidationError when every clip is locked.
std::vector<double> EffectiveWeights(std::span<const double> base,
                                     std::span<const int> levels,
                                     const CurriculumState& state,
                                     const CurriculumConfig& cfg);

// Total mass per level; index 0 is unused.
std::array<double, kNumLevels + 1> LevelMasses(std::span<const double> weights,
                                               std::span<const int> levels);

// Advances one training iteration. The next occupied level unlocks when
// AdvanceCheck passes. `metrics` may omit l_max, in
// which case only the iteration cap can advance.
CurriculumState Tick(const CurriculumState& state, const CurriculumConfig& cfg,
                     const LevelMetrics& metrics);

// Coarse 3-band grouping of difficulty ratings: 1-4, 5-7, 8-10.
int RatingToBand(int rating);

}  // namespace motrack

#endif  // MOTRACK_CURRICULUM_H_
