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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "motrack/clip_io.h"
#include "motrack/config_io.h"
#include "motrack/curriculum.h"
#include "motrack/error.h"
#include "motrack/metrics.h"
#include "motrack/motion_library.h"
#include "motrack/reward.h"
#include "motrack/sim_harness.h"
#include "motrack/tokenizer.h"
#include "motrack/version.h"

namespace motrack::cli {
namespace {

namespace fs = std::filesystem;

constexpr char kFooter[] =
    "Configuration precedence: command-line flag > --config file > built-in "
    "default.";

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes `text` to `path`, replacing it.
void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw Error("write failed: " + path.string());
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  int verbosity = 0;

  void Log(const std::string& msg) const {
    if (verbosity > 0) err << msg << "\n";
  }
};

// ---- inspect ---------------------------------------------------------------

struct InspectArgs {
  std::string library;
  std::string out;
};

void CmdInspect(const InspectArgs& a, const Context& ctx) {
  const MotionLibrary lib = LoadLibrary(a.library);
  ctx.Log("loaded " + std::to_string(lib.size()) + " clips from " + a.library);

  std::array<int, kNumLevels + 1> per_level{};
  std::array<int, 4> per_band{};
  double duration = 0.0;
  std::size_t frames = 0;
  for (const MotionClip& c : lib.clips()) {
    ++per_level[c.difficulty];
    ++per_band[RatingToBand(c.difficulty)];
    duration += c.duration();
    frames += c.num_frames();
  }
  ctx.out << lib.size() << (lib.size() == 1 ? " clip\n" : " clips\n");
  ctx.out << "frames " << frames << "\n";
  ctx.out << "duration_s " << Fixed(duration) << "\n";
  ctx.out << "band 1 (ratings 1-4): " << per_band[1] << "\n";
  ctx.out << "band 2 (ratings 5-7): " << per_band[2] << "\n";
  ctx.out << "band 3 (ratings 8-10): " << per_band[3] << "\n";
  for (int l = kMinDifficulty; l <= kMaxDifficulty; ++l) {
    ctx.out << "level " << l << ": " << per_level[l] << "\n";
  }

  const fs::path manifest =
      a.out.empty() ? fs::path(a.library) / kManifestFileName : fs::path(a.out);
  std::ostringstream text;
  WriteManifest(lib.Manifest(), text);
  WriteText(manifest, text.str());
  ctx.Log("manifest written to " + manifest.string());
}

// ---- run-sim ---------------------------------------------------------------

struct RunSimArgs {
  std::string library;
  std::vector<int> levels;
  std::string config;
  std::string out;
  std::string curriculum_out;
  std::string baseline = "none";
  std::uint64_t seed = 0;
  int iterations = 0;
  int batch_size = 0;
  int num_seeds = 20;
  bool seed_set = false;
  bool iterations_set = false;
  bool batch_size_set = false;
};

int CmdRunSim(const RunSimArgs& a, const Context& ctx) {
  RunConfig cfg;
  if (!a.config.empty()) cfg = ReadRunConfig(a.config);
  if (a.seed_set) cfg.seed = a.seed;
  if (a.iterations_set) cfg.iterations = a.iterations;
  if (a.batch_size_set) cfg.batch_size = a.batch_size;
  cfg.Validate();

  std::vector<std::string> names;
  std::vector<int> levels;
  if (!a.library.empty()) {
    const MotionLibrary lib = LoadLibrary(a.library);
    for (const MotionClip& c : lib.clips()) names.push_back(c.name);
    levels = lib.Levels();
  } else {
    levels = a.levels;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "clip_%03zu", i);
      names.emplace_back(buf);
    }
  }
  ctx.Log("simulating " + std::to_string(names.size()) + " clips for " +
          std::to_string(cfg.iterations) + " iterations");

  if (a.baseline == "uniform") {
    std::vector<std::uint64_t> seeds;
    for (int k = 0; k < a.num_seeds; ++k) seeds.push_back(cfg.seed + k);
    const ComparisonReport report = CompareUniform(names, levels, cfg, seeds);
    double adaptive_max = 0.0;
    double uniform_max = 0.0;
    for (const ComparisonRow& row : report.rows) {
      adaptive_max += row.adaptive.max_error;
      uniform_max += row.uniform.max_error;
    }
    const double n = static_cast<double>(report.rows.size());
    ctx.out << "seeds " << report.rows.size() << "\n";
    ctx.out << "adaptive_wins " << report.adaptive_wins << "\n";
    ctx.out << "win_rate " << Fixed(report.win_rate) << "\n";
    ctx.out << "adaptive_mean_max_error " << Fixed(adaptive_max / n) << "\n";
    ctx.out << "uniform_mean_max_error " << Fixed(uniform_max / n) << "\n";
    if (!a.out.empty()) {
      std::ostringstream csv;
      WriteComparisonCsv(report, csv);
      WriteText(a.out, csv.str());
    }
    return 0;
  }

  const RunLog log = Run(names, levels, cfg);
  if (!a.out.empty()) {
    std::ostringstream csv;
    WriteRunCsv(log, csv);
    WriteText(a.out, csv.str());
  }
  if (!a.curriculum_out.empty()) {
    std::ostringstream csv;
    WriteCurriculumCsv(log, csv);
    WriteText(a.curriculum_out, csv.str());
  }
  const RunSummary summary = Summarize(log, cfg.learner);
  ctx.out << "clips " << names.size() << "\n";
  ctx.out << "iterations " << cfg.iterations << "\n";
  ctx.out << "final_l_max " << summary.final_l_max << "\n";
  ctx.out << "mean_error " << Fixed(summary.mean_error) << "\n";
  ctx.out << "max_error " << Fixed(summary.max_error) << "\n";

  const std::vector<std::string> broken = CheckRunInvariants(log, cfg);
  for (const std::string& b : broken) ctx.err << "invariant violated: " << b << "\n";
  return broken.empty() ? 0 : 1;
}

// ---- metrics ---------------------------------------------------------------

struct MetricsArgs {
  std::string ref;
  std::string actual;
  std::string out;
  std::string angle = "joint";
  std::string pooling = "samples";
};

void CmdMetrics(const MetricsArgs& a, const Context& ctx) {
  std::vector<MotionClip> refs;
  std::vector<MotionClip> acts;
  if (fs::is_directory(a.ref)) {
    const MotionLibrary ref_lib = LoadLibrary(a.ref);
    const MotionLibrary act_lib = LoadLibrary(a.actual);
    for (const MotionClip& r : ref_lib.clips()) {
      const MotionClip* match = act_lib.Find(r.name);
      if (match == nullptr) {
        throw Error("clip '" + r.name + "' missing from " + a.actual);
      }
      refs.push_back(r);
      acts.push_back(*match);
    }
  } else {
    refs.push_back(ReadClip(a.ref));
    acts.push_back(ReadClip(a.actual));
  }
  std::vector<LabeledPair> pairs;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (refs[i].layout.kind != ClipKind::kRobot ||
        acts[i].layout.kind != ClipKind::kRobot) {
      throw ValidationError("metrics need robot clips: " + refs[i].name);
    }
    if (refs[i].frames.size() != acts[i].frames.size()) {
      throw ShapeError("clip '" + refs[i].name + "': length mismatch (" +
                       std::to_string(refs[i].frames.size()) + " vs " +
                       std::to_string(acts[i].frames.size()) + " frames)");
    }
    pairs.push_back({refs[i].name, refs[i].difficulty,
                     {refs[i].frames, acts[i].frames}});
  }
  const AngleMetric angle =
      a.angle == "body" ? AngleMetric::kBodyGeodesic : AngleMetric::kJointAngle;
  const Pooling pooling =
      a.pooling == "clips" ? Pooling::kClipMeans : Pooling::kSamples;
  const MetricReport report = PerLevelReport(pairs, pooling, angle);
  WriteReportTable(report, ctx.out);
  if (!a.out.empty()) {
    std::ostringstream csv;
    WriteReportCsv(report, csv);
    WriteText(a.out, csv.str());
  }
}

// ---- reward ----------------------------------------------------------------

struct RewardArgs {
  std::string ref;
  std::string actual;
  std::string config;
  std::string step;
  int frame = -1;
};

void CmdReward(const RewardArgs& a, const Context& ctx) {
  RewardConfig cfg;
  if (!a.config.empty()) cfg = ParseRewardConfig(ReadText(a.config), a.config);
  const MotionClip ref = ReadClip(a.ref);
  const MotionClip act = ReadClip(a.actual);
  if (ref.layout.kind != ClipKind::kRobot || act.layout.kind != ClipKind::kRobot) {
    throw ValidationError("reward needs robot clips");
  }
  if (ref.frames.size() != act.frames.size()) {
    throw ShapeError("reward: reference and actual differ in frame count");
  }
  std::size_t begin = 0;
  std::size_t end = ref.frames.size();
  if (a.frame >= 0) {
    if (static_cast<std::size_t>(a.frame) >= end) {
      throw ValidationError("reward: --frame " + std::to_string(a.frame) +
                            " is past the last frame");
    }
    begin = static_cast<std::size_t>(a.frame);
    end = begin + 1;
  }
  std::map<std::string, double> sums;
  double task_total = 0.0;
  for (std::size_t t = begin; t < end; ++t) {
    const TaskRewardTerms terms = TaskRewards(ref.frames[t], act.frames[t], cfg);
    for (const auto& [k, v] : terms.Named()) sums[k] += v;
    task_total += terms.total;
  }
  const double n = static_cast<double>(end - begin);
  task_total /= n;
  for (const auto& [k, v] : sums) ctx.out << k << " " << Fixed(v / n) << "\n";
  double total = task_total;
  if (!a.step.empty()) {
    const ControlStep step = ParseControlStep(ReadText(a.step), a.step);
    const RegularizationTerms reg = Regularization(step, cfg);
    for (const auto& [k, v] : reg.Named()) ctx.out << k << " " << Fixed(v) << "\n";
    ctx.out << "task_total " << Fixed(task_total) << "\n";
    ctx.out << "regularization_total " << Fixed(reg.total) << "\n";
    total += reg.total;
  }
  ctx.out << "total " << Fixed(total) << "\n";
}

// ---- loss ------------------------------------------------------------------

struct LossArgs {
  std::string gt;
  std::string recon;
  std::string config;
  std::string reduction = "mean";
  double commit = 0.0;
  double fps = 0.0;
};

MotionTensor LoadTensor(const fs::path& path, double* fps) {
  if (path.extension() == kClipExtension) {
    const MotionClip clip = ReadClip(path);
    if (fps != nullptr) *fps = clip.fps;
    return MotionTensor::FromClip(clip);
  }
  return MotionTensor(ReadMatrix(path));
}

void CmdLoss(const LossArgs& a, const Context& ctx) {
  LossWeights weights;
  if (!a.config.empty()) weights = ParseLossWeights(ReadText(a.config), a.config);
  double clip_fps = 30.0;
  const MotionTensor gt = LoadTensor(a.gt, &clip_fps);
  const MotionTensor recon = LoadTensor(a.recon, nullptr);
  const double fps = a.fps > 0.0 ? a.fps : clip_fps;
  const Reduction reduction =
      a.reduction == "sum" ? Reduction::kSum : Reduction::kMean;
  const LossTerms terms = VqVaeLoss(gt, recon, a.commit, fps, weights, reduction);
  ctx.out << "recons " << Fixed(terms.recons) << "\n";
  ctx.out << "commit " << Fixed(terms.commit) << "\n";
  ctx.out << "vel " << Fixed(terms.vel) << "\n";
  ctx.out << "root_rot " << Fixed(terms.rot) << "\n";
  ctx.out << "root_pos " << Fixed(terms.trans) << "\n";
  ctx.out << "total " << Fixed(terms.total) << "\n";
}

// ---- quantize --------------------------------------------------------------

struct QuantizeArgs {
  std::string codebook;
  std::string latents;
  std::string out;
};

void CmdQuantize(const QuantizeArgs& a, const Context& ctx) {
  const Codebook codebook = Codebook::Load(a.codebook);
  const Quantization q = Quantize(ReadMatrix(a.latents), codebook);
  std::ostringstream indices;
  for (std::size_t i = 0; i < q.indices.size(); ++i) {
    indices << (i == 0 ? "" : " ") << q.indices[i];
  }
  ctx.out << "indices " << indices.str() << "\n";
  ctx.out << "commit_sq_dist " << Fixed(q.commit_sq_dist) << "\n";
  if (!a.out.empty()) WriteText(a.out, indices.str() + "\n");
}

// ---- export-config ---------------------------------------------------------

struct ExportArgs {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void CmdExportConfig(const ExportArgs& a, const Context& ctx) {
  std::string text;
  if (a.config.empty() && !a.seed_set) {
    text = DefaultConfigJson();
  } else {
    RunConfig cfg;
    if (!a.config.empty()) cfg = ReadRunConfig(a.config);
    if (a.seed_set) cfg.seed = a.seed;
    text = RunConfigToJson(cfg);
  }
  if (a.out.empty()) {
    ctx.out << text;
  } else {
    WriteText(a.out, text);
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"motrack: motion tracking training infrastructure"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));
  int verbosity = 0;
  app.add_flag("-v,--verbose", verbosity, "Print progress to stderr");

  InspectArgs inspect;
  CLI::App* inspect_cmd =
      app.add_subcommand("inspect", "Summarize a clip library and write its manifest");
  inspect_cmd->add_option("--library", inspect.library, "Library directory")
      ->required();
  inspect_cmd->add_option("--out", inspect.out,
                          "Manifest path (default <library>/manifest.txt)");

  RunSimArgs run;
  CLI::App* run_cmd =
      app.add_subcommand("run-sim", "Run the synthetic training loop");
  CLI::Option* lib_opt =
      run_cmd->add_option("--library", run.library, "Library directory");
  CLI::Option* levels_opt =
      run_cmd->add_option("--levels", run.levels,
                          "Synthetic clips given by difficulty, e.g. 1,1,2,3")
          ->delimiter(',')
          ->check(CLI::Range(kMinDifficulty, kMaxDifficulty));
  lib_opt->excludes(levels_opt);
  run_cmd->add_option("--config", run.config, "Run configuration (JSON)");
  run_cmd->add_option("--out", run.out, "Per-iteration CSV log");
  run_cmd->add_option("--curriculum-out", run.curriculum_out,
                      "Per-iteration curriculum CSV");
  CLI::Option* seed_opt = run_cmd->add_option("--seed", run.seed, "RNG seed");
  CLI::Option* iter_opt =
      run_cmd->add_option("--iterations", run.iterations, "Iterations")
          ->check(CLI::PositiveNumber);
  CLI::Option* batch_opt =
      run_cmd->add_option("--batch-size", run.batch_size, "Samples per iteration")
          ->check(CLI::PositiveNumber);
  run_cmd->add_option("--baseline", run.baseline,
                      "'uniform' compares against uniform sampling")
      ->check(CLI::IsMember({"none", "uniform"}));
  run_cmd->add_option("--num-seeds", run.num_seeds,
                      "Seeds in the comparison, starting at --seed")
      ->check(CLI::Range(2, 100000));

  MetricsArgs metrics;
  CLI::App* metrics_cmd = app.add_subcommand(
      "metrics", "MPJPE, MPJAE and MPJVE between two clips or libraries");
  metrics_cmd->add_option("--ref", metrics.ref, "Reference clip or library")
      ->required();
  metrics_cmd->add_option("--actual", metrics.actual, "Actual clip or library")
      ->required();
  metrics_cmd->add_option("--out", metrics.out, "CSV report");
  metrics_cmd->add_option("--angle", metrics.angle, "joint or body")
      ->check(CLI::IsMember({"joint", "body"}));
  metrics_cmd->add_option("--pooling", metrics.pooling, "samples or clips")
      ->check(CLI::IsMember({"samples", "clips"}));

  RewardArgs reward;
  CLI::App* reward_cmd = app.add_subcommand(
      "reward", "Tracking reward terms between a reference and an actual clip");
  reward_cmd->add_option("--ref", reward.ref, "Reference clip")->required();
  reward_cmd->add_option("--actual", reward.actual, "Actual clip")->required();
  reward_cmd->add_option("--config", reward.config, "Reward configuration (JSON)");
  reward_cmd->add_option("--step", reward.step,
                         "Control step (JSON) for the regularization terms");
  reward_cmd->add_option("--frame", reward.frame,
                         "Single frame to score (default: mean over frames)")
      ->check(CLI::NonNegativeNumber);

  LossArgs loss;
  CLI::App* loss_cmd = app.add_subcommand("loss", "Tokenizer training loss");
  loss_cmd->add_option("--gt", loss.gt, "Ground truth (.clip or matrix file)")
      ->required();
  loss_cmd->add_option("--recon", loss.recon, "Reconstruction")->required();
  loss_cmd->add_option("--commit", loss.commit, "Commitment squared distance")
      ->check(CLI::NonNegativeNumber);
  loss_cmd->add_option("--fps", loss.fps, "Frame rate (default: clip fps or 30)")
      ->check(CLI::PositiveNumber);
  loss_cmd->add_option("--config", loss.config, "Loss weights (JSON)");
  loss_cmd->add_option("--reduction", loss.reduction, "mean or sum")
      ->check(CLI::IsMember({"mean", "sum"}));

  QuantizeArgs quantize;
  CLI::App* quantize_cmd =
      app.add_subcommand("quantize", "Nearest-code assignment of latent rows");
  quantize_cmd->add_option("--codebook", quantize.codebook, "Codebook matrix")
      ->required();
  quantize_cmd->add_option("--latents", quantize.latents, "Latent matrix")
      ->required();
  quantize_cmd->add_option("--out", quantize.out, "Index file");

  ExportArgs exp;
  CLI::App* export_cmd = app.add_subcommand(
      "export-config", "Print built-in defaults or a resolved run configuration");
  export_cmd->add_option("--config", exp.config, "Run configuration to resolve");
  export_cmd->add_option("--out", exp.out, "Output file (default stdout)");
  CLI::Option* export_seed = export_cmd->add_option("--seed", exp.seed, "RNG seed");

  std::vector<const char*> argv{"motrack"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const Context ctx{out, err, verbosity};
  try {
    if (inspect_cmd->parsed()) {
      CmdInspect(inspect, ctx);
    } else if (run_cmd->parsed()) {
      if (run.library.empty() && run.levels.empty()) {
        throw Error("run-sim needs --library or --levels");
      }
      run.seed_set = seed_opt->count() > 0;
      run.iterations_set = iter_opt->count() > 0;
      run.batch_size_set = batch_opt->count() > 0;
      return CmdRunSim(run, ctx);
    } else if (metrics_cmd->parsed()) {
      CmdMetrics(metrics, ctx);
    } else if (reward_cmd->parsed()) {
      CmdReward(reward, ctx);
    } else if (loss_cmd->parsed()) {
      CmdLoss(loss, ctx);
    } else if (quantize_cmd->parsed()) {
      CmdQuantize(quantize, ctx);
    } else if (export_cmd->parsed()) {
      exp.seed_set = export_seed->count() > 0;
      CmdExportConfig(exp, ctx);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace motrack::cli
