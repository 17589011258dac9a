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

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "motrack/clip_io.h"
#include "motrack/error.h"

namespace motrack {
namespace {

void RequireRange(double v, double lo, double hi, const char* name) {
  if (!(v >= lo && v <= hi)) {
    std::ostringstream msg;
    msg << "scheduler " << name << " = " << v << " outside [" << lo << ", "
        << hi << "]";
    throw ValidationError(msg.str());
  }
}

void RequirePositive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string("scheduler ") + name +
                          " must be positive");
  }
}

}  // namespace

void SchedulerConfig::Validate() const {
  RequireRange(alpha, 0.0, 1.0, "alpha");
  RequireRange(beta, 0.0, 1.0, "beta");
  RequireRange(w, 0.0, 1.0, "w");
  RequirePositive(c, "c");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("scheduler gamma must be finite and >= 0");
  }
  RequirePositive(temperature, "temperature");
  RequireRange(eps_explore, 0.0, 1.0, "eps_explore");
  RequirePositive(eps_num, "eps_num");
}

ClipStats UpdateError(const ClipStats& stats, double observed_error,
                      double alpha) {
  RequireRange(alpha, 0.0, 1.0, "alpha");
  if (!(observed_error >= 0.0) || !std::isfinite(observed_error)) {
    throw ValidationError("tracking error must be finite and >= 0");
  }
  ClipStats out = stats;
  out.error = stats.initialized
                  ? (1.0 - alpha) * stats.error + alpha * observed_error
                  : observed_error;
  out.initialized = true;
  return out;
}

ClipStats UpdateOutcomeFraction(const ClipStats& stats,
                                double success_fraction, double beta) {
  RequireRange(beta, 0.0, 1.0, "beta");
  RequireRange(success_fraction, 0.0, 1.0, "success fraction");
  ClipStats out = stats;
  out.success = (1.0 - beta) * stats.success + beta * success_fraction;
  out.failure = (1.0 - beta) * stats.failure + beta * (1.0 - success_fraction);
  return out;
}

ClipStats UpdateOutcome(const ClipStats& stats, bool success, double beta) {
  return UpdateOutcomeFraction(stats, success ? 1.0 : 0.0, beta);
}

double SuccessProb(const ClipStats& stats, double eps_num) {
  return stats.success / (stats.success + stats.failure + eps_num);
}

double DifficultyScore(const ClipStats& stats, const SchedulerConfig& cfg) {
  const double err = std::clamp(stats.error / cfg.c, 0.0, 1.0);
  return (1.0 - cfg.w) * err + cfg.w * (1.0 - SuccessProb(stats, cfg.eps_num));
}

SchedulerState::SchedulerState(std::vector<std::string> clip_names)
    : names_(std::move(clip_names)), stats_(names_.size()) {}

void UpdateBatch(SchedulerState& state, std::span<const int> clip_indices,
                 std::span<const double> errors,
                 std::span<const std::uint8_t> successes,
                 const SchedulerConfig& cfg) {
  if (clip_indices.size() != errors.size() ||
      clip_indices.size() != successes.size()) {
    throw ShapeError("batch update: clip_indices, errors and successes "
                     "must have equal length");
  }
  const std::size_t n = state.size();
  std::vector<double> err_sum(n, 0.0);
  std::vector<int> episodes(n, 0);
  std::vector<int> wins(n, 0);
  for (std::size_t k = 0; k < clip_indices.size(); ++k) {
    const int i = clip_indices[k];
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
      throw ValidationError("batch update: clip index " + std::to_string(i) +
                            " out of range");
    }
    if (!(errors[k] >= 0.0) || !std::isfinite(errors[k])) {
      throw ValidationError("batch update: tracking error must be >= 0");
    }
    err_sum[i] += errors[k];
    ++episodes[i];
    wins[i] += successes[k] != 0 ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (episodes[i] == 0) continue;
    const double count = episodes[i];
    ClipStats s = UpdateError(state.stats(i), err_sum[i] / count, cfg.alpha);
    if (wins[i] == 0 || wins[i] == episodes[i]) {
      s = UpdateOutcome(s, wins[i] != 0, cfg.beta);
    } else {
      s = UpdateOutcomeFraction(s, wins[i] / count, cfg.beta);
    }
    state.mutable_stats(i) = s;
  }
}

std::vector<double> DifficultyScores(const SchedulerState& state,
                                     const SchedulerConfig& cfg) {
  std::vector<double> r;
  r.reserve(state.size());
  for (const ClipStats& s : state.stats()) r.push_back(DifficultyScore(s, cfg));
  return r;
}

std::vector<double> SamplingDistributionFromScores(
    std::span<const double> scores, const SchedulerConfig& cfg) {
  const std::size_t n = scores.size();
  if (n == 0) throw ValidationError("sampling distribution needs N >= 1");
  std::vector<double> logits(n);
  for (std::size_t i = 0; i < n; ++i) {
    logits[i] = cfg.gamma * std::log(scores[i] + cfg.eps_num) / cfg.temperature;
  }
  const double top = *std::max_element(logits.begin(), logits.end());
  double z = 0.0;
  for (double& l : logits) {
    l = std::exp(l - top);
    z += l;
  }
  const double floor = cfg.eps_explore / static_cast<double>(n);
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = (1.0 - cfg.eps_explore) * (logits[i] / z) + floor;
  }
  return p;
}

std::vector<double> SamplingDistribution(const SchedulerState& state,
                                         const SchedulerConfig& cfg) {
  const std::vector<double> r = DifficultyScores(state, cfg);
  return SamplingDistributionFromScores(r, cfg);
}

std::vector<int> SampleClips(std::span<const double> weights, int count,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return SampleClipsWith(weights, count, rng);
}

void WriteCheckpoint(const SchedulerState& state, std::ostream& out) {
  out << "# name E S F initialized\n";
  for (std::size_t i = 0; i < state.size(); ++i) {
    const ClipStats& s = state.stats(i);
    out << state.names()[i] << ' ' << FormatExact(s.error) << ' '
        << FormatExact(s.success) << ' ' << FormatExact(s.failure) << ' '
        << (s.initialized ? 1 : 0) << '\n';
  }
}

SchedulerState ReadCheckpoint(std::istream& in, const std::string& source) {
  std::vector<std::string> names;
  std::vector<ClipStats> stats;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string name;
    ClipStats s;
    int init = 0;
    if (!(words >> name >> s.error >> s.success >> s.failure >> init) ||
        (init != 0 && init != 1)) {
      throw ParseError(source, "line " + std::to_string(line_no),
                       "expected 'name E S F initialized'");
    }
    if (s.error < 0.0 || s.success < 0.0 || s.failure < 0.0) {
      throw ParseError(source, "line " + std::to_string(line_no),
                       "statistics must be >= 0");
    }
    s.initialized = init == 1;
    names.push_back(std::move(name));
    stats.push_back(s);
  }
  SchedulerState state(std::move(names));
  for (std::size_t i = 0; i < stats.size(); ++i) state.mutable_stats(i) = stats[i];
  return state;
}

}  // namespace motrack
