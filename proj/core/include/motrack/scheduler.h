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

#ifndef MOTRACK_SCHEDULER_H_
#define MOTRACK_SCHEDULER_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace motrack {

// Adaptive per-clip sampling. Each clip keeps an EMA of its tracking error
// and EMAs of success/failure events; these combine into a difficulty score
// that drives a tempered softmax mixed with a uniform floor.
struct SchedulerConfig {
  double alpha = 0.1;         // error EMA rate
  double beta = 0.05;         // outcome EMA rate
  double w = 0.5;             // failure share of the difficulty score
  double c = 0.5;             // error normalization (m)
  double gamma = 1.0;         // log-score gain
  double temperature = 1.0;
  double eps_explore = 0.1;   // uniform mixing weight
  double eps_num = 1e-6;      // keeps the ratio and the log finite

  // Throws ValidationError naming the first out-of-range parameter.
  void Validate() const;
};

struct ClipStats {
  double error = 0.0;    // E
  double success = 0.0;  // S
  double failure = 0.0;  // F
  bool initialized = false;

  bool operator==(const ClipStats&) const = default;
};

ClipStats UpdateError(const ClipStats& stats, double observed_error,
                      double alpha);
ClipStats UpdateOutcome(const ClipStats& stats, bool success, double beta);
// Fractional form used for batched episodes: `success_fraction` of the events
// were successes.
ClipStats UpdateOutcomeFraction(const ClipStats& stats,
                                double success_fraction, double beta);
double SuccessProb(const ClipStats& stats, double eps_num);
double DifficultyScore(const ClipStats& stats, const SchedulerConfig& cfg);

// Per-clip statistics over a library. Single writer: mutate only through
// UpdateBatch between reads.
class SchedulerState {
 public:
  SchedulerState() = default;
  explicit SchedulerState(std::vector<std::string> clip_names);

  std::size_t size() const { return stats_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<ClipStats>& stats() const { return stats_; }
  const ClipStats& stats(std::size_t i) const { return stats_.at(i); }
  ClipStats& mutable_stats(std::size_t i) { return stats_.at(i); }

  bool operator==(const SchedulerState&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<ClipStats> stats_;
};

// Applies one iteration's episodes. Episodes on the same clip are pooled:
// their errors are averaged into a single error update and their success
// fraction into a single outcome update. Clips without episodes are left
// untouched. Throws ShapeError on length mismatch and ValidationError on bad
// indices or negative errors; the state is unchanged on error.
void UpdateBatch(SchedulerState& state, std::span<const int> clip_indices,
                 std::span<const double> errors,
                 std::span<const std::uint8_t> successes,
                 const SchedulerConfig& cfg);

std::vector<double> DifficultyScores(const SchedulerState& state,
                                     const SchedulerConfig& cfg);

// p_i = (1 - eps) softmax(gamma log(r_i + eps_num) / T)_i + eps / N.
std::vector<double> SamplingDistribution(const SchedulerState& state,
                                         const SchedulerConfig& cfg);
std::vector<double> SamplingDistributionFromScores(
    std::span<const double> scores, const SchedulerConfig& cfg);

// `count` i.i.d. draws from `weights` (non-negative, positive sum).
std::vector<int> SampleClips(std::span<const double> weights, int count,
                             std::uint64_t seed);

template <typename Rng>
std::vector<int> SampleClipsWith(std::span<const double> weights, int count,
                                 Rng& rng);

// Checkpoint: one "name E S F initialized" line per clip.
void WriteCheckpoint(const SchedulerState& state, std::ostream& out);
SchedulerState ReadCheckpoint(std::istream& in, const std::string& source);

}  // namespace motrack

#include "motrack/internal/sampling_impl.h"

#endif  // MOTRACK_SCHEDULER_H_
