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

#include "motrack/sim_harness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>

#include "motrack/error.h"

namespace motrack {
namespace {

std::string Fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

double NoiselessError(const LearnerModel& model, int level,
                      std::int64_t exposure) {
  return model.base_error[level] *
         std::pow(1.0 - model.learn_rate, static_cast<double>(exposure));
}

// Per-level metrics for levels whose clips have all been observed.
LevelMetrics ObservedLevelMetrics(const SchedulerState& state,
                                  std::span<const int> levels,
                                  const LearnerModel& model) {
  std::array<double, kNumLevels + 1> sum{};
  std::array<std::size_t, kNumLevels + 1> seen{};
  std::array<std::size_t, kNumLevels + 1> total{};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    ++total[levels[i]];
    if (state.stats(i).initialized) {
      sum[levels[i]] += state.stats(i).error;
      ++seen[levels[i]];
    }
  }
  LevelMetrics out;
  for (int l = kMinDifficulty; l <= kNumLevels; ++l) {
    if (total[l] == 0 || seen[l] != total[l]) continue;
    const double mpjpe = sum[l] / static_cast<double>(seen[l]);
    out[l] = {mpjpe, mpjpe * model.angle_per_meter, seen[l]};
  }
  return out;
}

}  // namespace

LearnerModel LearnerModel::Linear(double intercept, double slope) {
  LearnerModel m;
  for (int l = kMinDifficulty; l <= kNumLevels; ++l) {
    m.base_error[l] = intercept + slope * l;
  }
  return m;
}

void LearnerModel::Validate() const {
  for (int l = kMinDifficulty; l <= kNumLevels; ++l) {
    if (!(base_error[l] >= 0.0) || !std::isfinite(base_error[l])) {
      throw ValidationError("learner base_error must be finite and >= 0");
    }
    if (l > kMinDifficulty && base_error[l] < base_error[l - 1]) {
      throw ValidationError("learner base_error must be non-decreasing");
    }
  }
  if (!(learn_rate >= 0.0 && learn_rate < 1.0)) {
    throw ValidationError("learner learn_rate must be in [0, 1)");
  }
  if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) {
    throw ValidationError("learner noise_std must be >= 0");
  }
  if (!(fail_threshold > 0.0)) {
    throw ValidationError("learner fail_threshold must be positive");
  }
  if (!(angle_per_meter >= 0.0)) {
    throw ValidationError("learner angle_per_meter must be >= 0");
  }
}

LearnerOutcome StepLearner(const LearnerModel& model, int level,
                           std::int64_t exposure, std::mt19937_64& rng) {
  if (exposure < 0) throw ValidationError("exposure count must be >= 0");
  if (level < kMinDifficulty || level > kMaxDifficulty) {
    throw ValidationError("learner level outside 1..10");
  }
  double e = NoiselessError(model, level, exposure);
  if (model.noise_std > 0.0) {
    std::normal_distribution<double> noise(0.0, model.noise_std);
    e += noise(rng);
  }
  e = std::max(e, 0.0);
  return {e, e < model.fail_threshold};
}

void RunConfig::Validate() const {
  scheduler.Validate();
  curriculum.Validate();
  learner.Validate();
  if (iterations < 0) throw ValidationError("iterations must be >= 0");
  if (batch_size < 1) throw ValidationError("batch_size must be >= 1");
}

RunLog Run(std::vector<std::string> clip_names, std::vector<int> levels,
           const RunConfig& cfg) {
  cfg.Validate();
  if (clip_names.empty()) throw ValidationError("run needs at least one clip");
  if (clip_names.size() != levels.size()) {
    throw ShapeError("run: one level per clip required");
  }
  const std::size_t n = clip_names.size();

  RunLog log;
  log.clip_names = clip_names;
  log.levels = levels;
  log.final_state = SchedulerState(std::move(clip_names));
  log.final_curriculum = StartCurriculum(levels);
  log.exposures.assign(n, 0);
  log.records.reserve(cfg.iterations);

  SchedulerState& state = log.final_state;
  CurriculumState& curriculum = log.final_curriculum;
  std::mt19937_64 rng(cfg.seed);
  const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));

  std::vector<int> batch_clips(cfg.batch_size);
  std::vector<double> batch_errors(cfg.batch_size);
  std::vector<std::uint8_t> batch_success(cfg.batch_size);

  for (int it = 0; it < cfg.iterations; ++it) {
    IterationRecord rec;
    rec.iteration = it;
    rec.l_max = curriculum.l_max;
    rec.ramp_progress = curriculum.ramp_progress;

    const std::vector<double> base = cfg.mode == SamplingMode::kAdaptive
                                         ? SamplingDistribution(state, cfg.scheduler)
                                         : uniform;
    rec.probability = cfg.curriculum.enabled
                          ? EffectiveWeights(base, levels, curriculum,
                                             cfg.curriculum)
                          : base;
    rec.level_mass = LevelMasses(rec.probability, levels);

    const std::vector<int> draws =
        SampleClipsWith(rec.probability, cfg.batch_size, rng);
    rec.samples.assign(n, 0);
    for (int k = 0; k < cfg.batch_size; ++k) {
      const int i = draws[k];
      const LearnerOutcome o =
          StepLearner(cfg.learner, levels[i], log.exposures[i], rng);
      batch_clips[k] = i;
      batch_errors[k] = o.error;
      batch_success[k] = o.success ? 1 : 0;
      ++rec.samples[i];
    }
    for (std::size_t i = 0; i < n; ++i) log.exposures[i] += rec.samples[i];
    UpdateBatch(state, batch_clips, batch_errors, batch_success,
                cfg.scheduler);

    if (cfg.curriculum.enabled) {
      curriculum = Tick(curriculum, cfg.curriculum,
                        ObservedLevelMetrics(state, levels, cfg.learner));
      rec.reason = curriculum.last_reason;
    }

    rec.error.resize(n);
    double proxy_sum = 0.0;
    int proxy_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const ClipStats& s = state.stats(i);
      rec.error[i] = s.error;
      if (s.initialized && levels[i] <= rec.l_max) {
        proxy_sum += s.error;
        ++proxy_count;
      }
    }
    rec.score = DifficultyScores(state, cfg.scheduler);
    rec.mpjpe_proxy = proxy_count ? proxy_sum / proxy_count : 0.0;
    log.records.push_back(std::move(rec));
  }
  return log;
}

RunLog Run(const MotionLibrary& library, const RunConfig& cfg) {
  std::vector<std::string> names;
  for (const MotionClip& c : library.clips()) names.push_back(c.name);
  return Run(std::move(names), library.Levels(), cfg);
}

std::vector<double> FinalClipErrors(const RunLog& log,
                                    const LearnerModel& learner) {
  std::vector<double> out(log.clip_names.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const ClipStats& s = log.final_state.stats(i);
    out[i] = s.initialized ? s.error
                           : NoiselessError(learner, log.levels[i],
                                            log.exposures[i]);
  }
  return out;
}

RunSummary Summarize(const RunLog& log, const LearnerModel& learner) {
  RunSummary summary;
  summary.final_l_max = log.final_curriculum.l_max;
  const std::vector<double> errors = FinalClipErrors(log, learner);
  if (!errors.empty()) {
    summary.max_error = *std::max_element(errors.begin(), errors.end());
    summary.mean_error = std::accumulate(errors.begin(), errors.end(), 0.0) /
                         static_cast<double>(errors.size());
  }
  return summary;
}

void WriteRunCsv(const RunLog& log, std::ostream& out) {
  out << "iteration,clip,level,samples,E,r,p\n";
  for (const IterationRecord& rec : log.records) {
    for (std::size_t i = 0; i < log.clip_names.size(); ++i) {
      out << rec.iteration << ',' << log.clip_names[i] << ',' << log.levels[i]
          << ',' << rec.samples[i] << ',' << Fixed6(rec.error[i]) << ','
          << Fixed6(rec.score[i]) << ',' << Fixed6(rec.probability[i])
          << '\n';
    }
  }
}

void WriteCurriculumCsv(const RunLog& log, std::ostream& out) {
  out << "iteration,l_max,reason,ramp_progress";
  for (int l = kMinDifficulty; l <= kNumLevels; ++l) out << ",mass_" << l;
  out << ",mpjpe_proxy\n";
  for (const IterationRecord& rec : log.records) {
    out << rec.iteration << ',' << rec.l_max << ',' << ToString(rec.reason)
        << ',' << Fixed6(rec.ramp_progress);
    for (int l = kMinDifficulty; l <= kNumLevels; ++l) {
      out << ',' << Fixed6(rec.level_mass[l]);
    }
    out << ',' << Fixed6(rec.mpjpe_proxy) << '\n';
  }
}

std::vector<std::string> CheckRunInvariants(const RunLog& log,
                                            const RunConfig& cfg) {
  std::vector<std::string> problems;
  auto report = [&](int it, const std::string& what) {
    std::ostringstream msg;
    msg << "iteration " << it << ": " << what;
    problems.push_back(msg.str());
  };
  std::array<bool, kNumLevels + 1> occupied{};
  for (int l : log.levels) occupied[l] = true;

  int prev_l_max = 0;
  for (const IterationRecord& rec : log.records) {
    if (rec.l_max < prev_l_max) report(rec.iteration, "l_max decreased");
    if (rec.l_max < kMinDifficulty || rec.l_max > kMaxDifficulty) {
      report(rec.iteration, "l_max outside 1..10");
    }
    prev_l_max = rec.l_max;

    const double sum =
        std::accumulate(rec.probability.begin(), rec.probability.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9) report(rec.iteration, "weights do not sum to 1");
    if (!cfg.curriculum.enabled) continue;
    for (std::size_t i = 0; i < log.levels.size(); ++i) {
      if (log.levels[i] > rec.l_max && rec.probability[i] != 0.0) {
        report(rec.iteration, "locked clip " + log.clip_names[i] +
                                  " has nonzero mass");
      }
    }
    for (int l = kMinDifficulty; l <= rec.l_max; ++l) {
      if (occupied[l] &&
          rec.level_mass[l] < cfg.curriculum.min_level_ratio - 1e-9) {
        report(rec.iteration,
               "level " + std::to_string(l) + " mass below the floor");
      }
    }
  }
  if (log.final_curriculum.l_max < prev_l_max) {
    problems.push_back("final l_max below the last logged l_max");
  }
  return problems;
}

ComparisonReport CompareUniform(const std::vector<std::string>& clip_names,
                                const std::vector<int>& levels,
                                const RunConfig& cfg,
                                std::span<const std::uint64_t> seeds) {
  if (seeds.size() < 2) {
    throw ValidationError("comparison needs at least 2 seeds");
  }
  ComparisonReport report;
  for (std::uint64_t seed : seeds) {
    RunConfig adaptive = cfg;
    adaptive.seed = seed;
    adaptive.mode = SamplingMode::kAdaptive;
    RunConfig uniform = adaptive;
    uniform.mode = SamplingMode::kUniform;

    ComparisonRow row;
    row.seed = seed;
    row.adaptive = Summarize(Run(clip_names, levels, adaptive), cfg.learner);
    row.uniform = Summarize(Run(clip_names, levels, uniform), cfg.learner);
    if (row.adaptive.max_error < row.uniform.max_error) ++report.adaptive_wins;
    report.rows.push_back(row);
  }
  report.win_rate =
      static_cast<double>(report.adaptive_wins) / static_cast<double>(seeds.size());
  return report;
}

void WriteComparisonCsv(const ComparisonReport& report, std::ostream& out) {
  out << "seed,adaptive_max,adaptive_mean,uniform_max,uniform_mean,"
         "adaptive_wins\n";
  for (const ComparisonRow& row : report.rows) {
    out << row.seed << ',' << Fixed6(row.adaptive.max_error) << ','
        << Fixed6(row.adaptive.mean_error) << ','
        << Fixed6(row.uniform.max_error) << ','
        << Fixed6(row.uniform.mean_error) << ','
        << (row.adaptive.max_error < row.uniform.max_error ? 1 : 0) << '\n';
  }
}

}  // namespace motrack
