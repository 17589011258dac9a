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

#include "motrack/curriculum.h"

#include <cmath>
#include <numeric>
#include <sstream>

#include "motrack/error.h"

namespace motrack {
namespace {

std::optional<int> NextOccupied(const CurriculumState& state, int level) {
  for (int l = level + 1; l <= kNumLevels; ++l) {
    if (state.occupied[l]) return l;
  }
  return std::nullopt;
}

void CheckLevel(int level) {
  if (level < kMinDifficulty || level > kMaxDifficulty) {
    throw ValidationError("difficulty level " + std::to_string(level) +
                          " outside 1..10");
  }
}

}  // namespace

void CurriculumConfig::Validate() const {
  if (!(theta_pos > 0.0) || !(theta_ang > 0.0)) {
    throw ValidationError("curriculum thresholds must be positive");
  }
  if (auto_advance_iters < 1) {
    throw ValidationError("curriculum auto_advance_iters must be >= 1");
  }
  if (!(w_new >= 1.0) || !std::isfinite(w_new)) {
    throw ValidationError("curriculum w_new must be >= 1");
  }
  if (!(min_level_ratio >= 0.0 && min_level_ratio < 1.0)) {
    throw ValidationError("curriculum min_level_ratio must be in [0, 1)");
  }
  if (ramp_iters < 0) {
    throw ValidationError("curriculum ramp_iters must be >= 0");
  }
}

std::string_view ToString(AdvanceReason reason) {
  switch (reason) {
    case AdvanceReason::kThresholds:
      return "thresholds";
    case AdvanceReason::kAuto:
      return "auto";
    case AdvanceReason::kNone:
      break;
  }
  return "none";
}

CurriculumState StartCurriculum(std::span<const int> clip_levels) {
  CurriculumState state;
  state.occupied.fill(false);
  for (int level : clip_levels) {
    CheckLevel(level);
    state.occupied[level] = true;
  }
  if (auto first = NextOccupied(state, 0)) state.l_max = *first;
  return state;
}

AdvanceDecision AdvanceCheck(const CurriculumState& state,
                             const CurriculumConfig& cfg, double mpjpe_at_lmax,
                             double mpjae_at_lmax) {
  if (!NextOccupied(state, state.l_max)) return {};
  if (mpjpe_at_lmax < cfg.theta_pos && mpjae_at_lmax < cfg.theta_ang) {
    return {true, AdvanceReason::kThresholds};
  }
  if (state.iters_at_level >= cfg.auto_advance_iters) {
    return {true, AdvanceReason::kAuto};
  }
  return {};
}

std::array<double, kNumLevels + 1> LevelMasses(std::span<const double> weights,
                                               std::span<const int> levels) {
  if (weights.size() != levels.size()) {
    throw ShapeError("level masses: one level label per weight required");
  }
  std::array<double, kNumLevels + 1> mass{};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    CheckLevel(levels[i]);
    mass[levels[i]] += weights[i];
  }
  return mass;
}

std::vector<double> EffectiveWeights(std::span<const double> base,
                                     std::span<const int> levels,
                                     const CurriculumState& state,
                                     const CurriculumConfig& cfg) {
  const std::size_t n = base.size();
  if (levels.size() != n) {
    throw ShapeError("effective weights: one level label per clip required");
  }
  for (std::size_t i = 0; i < n; ++i) {
    CheckLevel(levels[i]);
    if (!(base[i] >= 0.0)) {
      throw ValidationError("effective weights: base probabilities must be >= 0");
    }
  }

  std::vector<double> w(n, 0.0);
  std::array<double, kNumLevels + 1> level_w{};
  std::array<double, kNumLevels + 1> level_base{};
  std::array<int, kNumLevels + 1> level_count{};
  bool any_unlocked = false;
  for (std::size_t i = 0; i < n; ++i) {
    const int l = levels[i];
    if (l > state.l_max) continue;
    any_unlocked = true;
    w[i] = l == state.l_max ? state.ramp_progress * cfg.w_new * base[i]
                            : base[i];
    level_w[l] += w[i];
    level_base[l] += base[i];
    ++level_count[l];
  }
  if (!any_unlocked) {
    throw ValidationError("effective weights: every clip is locked");
  }

  double total = std::accumulate(level_w.begin(), level_w.end(), 0.0);
  if (!(total > 0.0)) {
    // Nothing admitted yet (only the ramping level is unlocked): fall back
    // to the unbiased probabilities.
    total = std::accumulate(level_base.begin(), level_base.end(), 0.0);
    level_w = level_base;
    for (std::size_t i = 0; i < n; ++i) {
      if (levels[i] <= state.l_max) w[i] = base[i];
    }
  }

  std::array<double, kNumLevels + 1> mass{};
  std::vector<int> present;
  for (int l = kMinDifficulty; l <= kNumLevels; ++l) {
    if (level_count[l] == 0) continue;
    present.push_back(l);
  }
  for (int l : present) {
    mass[l] = total > 0.0 ? level_w[l] / total
                          : 1.0 / static_cast<double>(present.size());
  }

  // Raise deficient levels to the floor and rescale the rest proportionally
  // until no rescaled level falls under the floor.
  const double floor = cfg.min_level_ratio;
  if (static_cast<double>(present.size()) * floor > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << present.size() << " unlocked levels x min_level_ratio " << floor
        << " exceeds 1";
    throw ValidationError(msg.str());
  }
  std::array<bool, kNumLevels + 1> pinned{};
  std::array<double, kNumLevels + 1> out_mass = mass;
  for (bool changed = true; changed;) {
    changed = false;
    int pinned_count = 0;
    double free_mass = 0.0;
    for (int l : present) {
      if (pinned[l]) {
        ++pinned_count;
      } else {
        free_mass += mass[l];
      }
    }
    const double rest = 1.0 - pinned_count * floor;
    for (int l : present) {
      if (pinned[l]) {
        out_mass[l] = floor;
      } else {
        out_mass[l] = free_mass > 0.0 ? mass[l] * rest / free_mass : 0.0;
      }
    }
    for (int l : present) {
      if (!pinned[l] && out_mass[l] < floor) {
        pinned[l] = true;
        changed = true;
      }
    }
  }

  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const int l = levels[i];
    if (l > state.l_max) continue;
    double share;
    if (level_w[l] > 0.0) {
      share = w[i] / level_w[l];
    } else if (level_base[l] > 0.0) {
      share = base[i] / level_base[l];
    } else {
      share = 1.0 / level_count[l];
    }
    out[i] = out_mass[l] * share;
  }
  return out;
}

CurriculumState Tick(const CurriculumState& state, const CurriculumConfig& cfg,
                     const LevelMetrics& metrics) {
  CurriculumState next = state;
  ++next.iters_at_level;
  if (cfg.ramp_iters <= 0) {
    next.ramp_progress = 1.0;
  } else if (next.ramp_progress < 1.0) {
    ++next.ramp_ticks;
    next.ramp_progress =
        std::min(1.0, static_cast<double>(next.ramp_ticks) / cfg.ramp_iters);
  }
  for (const auto& [level, m] : metrics) next.level_metrics[level] = m;

  double mpjpe = INFINITY;
  double mpjae = INFINITY;
  if (auto it = metrics.find(state.l_max); it != metrics.end()) {
    mpjpe = it->second.mpjpe;
    mpjae = it->second.mpjae;
  }
  const AdvanceDecision decision = AdvanceCheck(next, cfg, mpjpe, mpjae);
  next.last_reason = decision.reason;
  if (decision.advance) {
    next.l_max = *NextOccupied(next, next.l_max);
    next.iters_at_level = 0;
    next.ramp_ticks = 0;
    next.ramp_progress = cfg.ramp_iters <= 0 ? 1.0 : 0.0;
  }
  return next;
}

int RatingToBand(int rating) {
  CheckLevel(rating);
  if (rating <= 4) return 1;
  if (rating <= 7) return 2;
  return 3;
}

}  // namespace motrack
