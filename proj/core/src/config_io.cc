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

#include "motrack/config_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "motrack/error.h"
#include "motrack/observation.h"

namespace motrack {
namespace {

using nlohmann::json;

// Reads keys from one JSON object and rejects any key left unread.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string source, std::string path)
      : obj_(obj), source_(std::move(source)), path_(std::move(path)) {
    if (!obj_.is_object()) Fail(path_.empty() ? "(root)" : path_, "expected an object");
  }

  bool Has(const std::string& key) const { return obj_.contains(key); }

  template <typename T>
  void Optional(const std::string& key, T& out) {
    if (!obj_.contains(key)) return;
    Read(key, out);
  }

  template <typename T>
  void Required(const std::string& key, T& out) {
    if (!obj_.contains(key)) Fail(Path(key), "missing required key");
    Read(key, out);
  }

  ObjectReader Child(const std::string& key) {
    seen_.insert(key);
    return ObjectReader(obj_.at(key), source_, Path(key));
  }

  const json& Raw(const std::string& key) {
    seen_.insert(key);
    return obj_.at(key);
  }

  void Finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!seen_.count(it.key())) Fail(Path(it.key()), "unknown key");
    }
  }

  std::string Path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  [[noreturn]] void Fail(const std::string& field,
                         const std::string& detail) const {
    throw ParseError(source_, field, detail);
  }

 private:
  template <typename T>
  void Read(const std::string& key, T& out) {
    seen_.insert(key);
    const json& v = obj_.at(key);
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) Fail(Path(key), "expected a boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) Fail(Path(key), "expected an integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) Fail(Path(key), "expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) Fail(Path(key), "expected a string");
    }
    try {
      out = v.get<T>();
    } catch (const json::exception& e) {
      Fail(Path(key), e.what());
    }
  }

  const json& obj_;
  std::string source_;
  std::string path_;
  std::set<std::string> seen_;
};

json Parse(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, "(document)", e.what());
  }
}

void ReadScheduler(ObjectReader r, SchedulerConfig& c) {
  r.Optional("alpha", c.alpha);
  r.Optional("beta", c.beta);
  r.Optional("w", c.w);
  r.Optional("c", c.c);
  r.Optional("gamma", c.gamma);
  r.Optional("temperature", c.temperature);
  r.Optional("eps_explore", c.eps_explore);
  r.Optional("eps_num", c.eps_num);
  r.Finish();
}

json SchedulerJson(const SchedulerConfig& c) {
  return {{"alpha", c.alpha},
          {"beta", c.beta},
          {"w", c.w},
          {"c", c.c},
          {"gamma", c.gamma},
          {"temperature", c.temperature},
          {"eps_explore", c.eps_explore},
          {"eps_num", c.eps_num}};
}

void ReadCurriculum(ObjectReader r, CurriculumConfig& c) {
  r.Optional("enabled", c.enabled);
  r.Optional("theta_pos", c.theta_pos);
  r.Optional("theta_ang", c.theta_ang);
  r.Optional("auto_advance_iters", c.auto_advance_iters);
  r.Optional("w_new", c.w_new);
  r.Optional("min_level_ratio", c.min_level_ratio);
  r.Optional("ramp_iters", c.ramp_iters);
  r.Finish();
}

json CurriculumJson(const CurriculumConfig& c) {
  return {{"enabled", c.enabled},
          {"theta_pos", c.theta_pos},
          {"theta_ang", c.theta_ang},
          {"auto_advance_iters", c.auto_advance_iters},
          {"w_new", c.w_new},
          {"min_level_ratio", c.min_level_ratio},
          {"ramp_iters", c.ramp_iters}};
}

void ReadLearner(ObjectReader r, LearnerModel& m) {
  if (r.Has("base_error") && r.Has("linear")) {
    r.Fail(r.Path("base_error"), "give either base_error or linear, not both");
  }
  if (r.Has("base_error")) {
    const json& arr = r.Raw("base_error");
    if (!arr.is_array() || arr.size() != kNumLevels) {
      r.Fail(r.Path("base_error"), "expected 10 numbers, one per level");
    }
    for (int l = 0; l < kNumLevels; ++l) {
      if (!arr[l].is_number()) r.Fail(r.Path("base_error"), "expected numbers");
      m.base_error[l + 1] = arr[l].get<double>();
    }
  }
  if (r.Has("linear")) {
    ObjectReader lin = r.Child("linear");
    double intercept = 0.0;
    double slope = 0.0;
    lin.Required("intercept", intercept);
    lin.Required("slope", slope);
    lin.Finish();
    const LearnerModel shaped = LearnerModel::Linear(intercept, slope);
    m.base_error = shaped.base_error;
  }
  r.Optional("learn_rate", m.learn_rate);
  r.Optional("noise_std", m.noise_std);
  r.Optional("fail_threshold", m.fail_threshold);
  r.Optional("angle_per_meter", m.angle_per_meter);
  r.Finish();
}

json LearnerJson(const LearnerModel& m) {
  json base = json::array();
  for (int l = kMinDifficulty; l <= kNumLevels; ++l) base.push_back(m.base_error[l]);
  return {{"base_error", base},
          {"learn_rate", m.learn_rate},
          {"noise_std", m.noise_std},
          {"fail_threshold", m.fail_threshold},
          {"angle_per_meter", m.angle_per_meter}};
}

json RunJson(const RunConfig& c) {
  return {{"iterations", c.iterations},
          {"batch_size", c.batch_size},
          {"seed", c.seed},
          {"mode", c.mode == SamplingMode::kAdaptive ? "adaptive" : "uniform"},
          {"scheduler", SchedulerJson(c.scheduler)},
          {"curriculum", CurriculumJson(c.curriculum)},
          {"learner", LearnerJson(c.learner)}};
}

void ReadTerm(ObjectReader& parent, const std::string& key, KernelTerm& t) {
  if (!parent.Has(key)) return;
  ObjectReader r = parent.Child(key);
  r.Optional("weight", t.weight);
  r.Optional("sigma", t.sigma);
  r.Finish();
}

json TermJson(const KernelTerm& t) {
  return {{"weight", t.weight}, {"sigma", t.sigma}};
}

json RewardJson(const RewardConfig& c) {
  return {{"anchor_pos", TermJson(c.anchor_pos)},
          {"anchor_ori", TermJson(c.anchor_ori)},
          {"rel_body_pos", TermJson(c.rel_body_pos)},
          {"rel_body_ori", TermJson(c.rel_body_ori)},
          {"body_lin_vel", TermJson(c.body_lin_vel)},
          {"body_ang_vel", TermJson(c.body_ang_vel)},
          {"action_rate_weight", c.action_rate_weight},
          {"joint_limit_weight", c.joint_limit_weight},
          {"contact_weight", c.contact_weight},
          {"contact_force_threshold", c.contact_force_threshold},
          {"allowed_contact_bodies", c.allowed_contact_bodies},
          {"velocity_frame",
           c.velocity_frame == VelocityFrame::kWorld ? "world" : "anchor"}};
}

json LossJson(const LossWeights& w) {
  return {{"recons", w.recons},
          {"commit", w.commit},
          {"vel", w.vel},
          {"root_rot", w.root_rot},
          {"root_pos", w.root_pos}};
}

std::vector<double> NumberArray(ObjectReader& r, const std::string& key) {
  const json& arr = r.Raw(key);
  if (!arr.is_array()) r.Fail(r.Path(key), "expected an array of numbers");
  std::vector<double> out;
  for (const json& v : arr) {
    if (!v.is_number()) r.Fail(r.Path(key), "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

RunConfig ParseRunConfig(std::string_view text, const std::string& source) {
  const json doc = Parse(text, source);
  ObjectReader r(doc, source, "");
  RunConfig cfg;
  r.Required("iterations", cfg.iterations);
  r.Required("batch_size", cfg.batch_size);
  r.Optional("seed", cfg.seed);
  std::string mode = "adaptive";
  r.Optional("mode", mode);
  if (mode == "adaptive") {
    cfg.mode = SamplingMode::kAdaptive;
  } else if (mode == "uniform") {
    cfg.mode = SamplingMode::kUniform;
  } else {
    r.Fail("mode", "expected 'adaptive' or 'uniform'");
  }
  if (r.Has("scheduler")) ReadScheduler(r.Child("scheduler"), cfg.scheduler);
  if (r.Has("curriculum")) ReadCurriculum(r.Child("curriculum"), cfg.curriculum);
  if (r.Has("learner")) ReadLearner(r.Child("learner"), cfg.learner);
  r.Finish();
  try {
    cfg.Validate();
  } catch (const ValidationError& e) {
    throw ParseError(source, "(values)", e.what());
  }
  return cfg;
}

RunConfig ReadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseRunConfig(buf.str(), path.string());
}

std::string RunConfigToJson(const RunConfig& cfg) {
  return RunJson(cfg).dump(2) + "\n";
}

RewardConfig ParseRewardConfig(std::string_view text,
                               const std::string& source) {
  const json doc = Parse(text, source);
  ObjectReader r(doc, source, "");
  RewardConfig cfg;
  ReadTerm(r, "anchor_pos", cfg.anchor_pos);
  ReadTerm(r, "anchor_ori", cfg.anchor_ori);
  ReadTerm(r, "rel_body_pos", cfg.rel_body_pos);
  ReadTerm(r, "rel_body_ori", cfg.rel_body_ori);
  ReadTerm(r, "body_lin_vel", cfg.body_lin_vel);
  ReadTerm(r, "body_ang_vel", cfg.body_ang_vel);
  r.Optional("action_rate_weight", cfg.action_rate_weight);
  r.Optional("joint_limit_weight", cfg.joint_limit_weight);
  r.Optional("contact_weight", cfg.contact_weight);
  r.Optional("contact_force_threshold", cfg.contact_force_threshold);
  if (r.Has("allowed_contact_bodies")) {
    const json& arr = r.Raw("allowed_contact_bodies");
    if (!arr.is_array()) r.Fail("allowed_contact_bodies", "expected an array");
    cfg.allowed_contact_bodies.clear();
    for (const json& v : arr) {
      if (!v.is_string()) r.Fail("allowed_contact_bodies", "expected names");
      cfg.allowed_contact_bodies.insert(v.get<std::string>());
    }
  }
  std::string frame = "world";
  r.Optional("velocity_frame", frame);
  if (frame == "world") {
    cfg.velocity_frame = VelocityFrame::kWorld;
  } else if (frame == "anchor") {
    cfg.velocity_frame = VelocityFrame::kAnchor;
  } else {
    r.Fail("velocity_frame", "expected 'world' or 'anchor'");
  }
  r.Finish();
  try {
    cfg.Validate();
  } catch (const ValidationError& e) {
    throw ParseError(source, "(values)", e.what());
  }
  return cfg;
}

std::string RewardConfigToJson(const RewardConfig& cfg) {
  return RewardJson(cfg).dump(2) + "\n";
}

LossWeights ParseLossWeights(std::string_view text, const std::string& source) {
  const json doc = Parse(text, source);
  ObjectReader r(doc, source, "");
  LossWeights w;
  r.Optional("recons", w.recons);
  r.Optional("commit", w.commit);
  r.Optional("vel", w.vel);
  r.Optional("root_rot", w.root_rot);
  r.Optional("root_pos", w.root_pos);
  r.Finish();
  return w;
}

std::string LossWeightsToJson(const LossWeights& weights) {
  return LossJson(weights).dump(2) + "\n";
}

ControlStep ParseControlStep(std::string_view text, const std::string& source) {
  const json doc = Parse(text, source);
  ObjectReader r(doc, source, "");
  ControlStep step;
  if (r.Has("action")) step.action = NumberArray(r, "action");
  if (r.Has("prev_action")) step.prev_action = NumberArray(r, "prev_action");
  if (r.Has("joint_pos")) step.joint_pos = NumberArray(r, "joint_pos");
  if (r.Has("joint_limits")) {
    const json& arr = r.Raw("joint_limits");
    if (!arr.is_array()) r.Fail("joint_limits", "expected [[lo, hi], ...]");
    for (const json& pair : arr) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number()) {
        r.Fail("joint_limits", "expected [[lo, hi], ...]");
      }
      step.joint_limits.emplace_back(pair[0].get<double>(),
                                     pair[1].get<double>());
    }
  }
  if (r.Has("contacts")) {
    const json& arr = r.Raw("contacts");
    if (!arr.is_array()) r.Fail("contacts", "expected an array");
    for (const json& c : arr) {
      ObjectReader cr(c, source, "contacts[]");
      ContactReading reading;
      cr.Required("body", reading.body);
      cr.Required("force", reading.force);
      cr.Finish();
      step.contacts.push_back(std::move(reading));
    }
  }
  r.Finish();
  return step;
}

std::string DefaultConfigJson() {
  RunConfig run;
  json obs = json::array();
  for (const Segment& s : kObservationSegments) {
    obs.push_back({{"name", std::string(s.name)},
                   {"offset", s.offset},
                   {"width", s.width}});
  }
  const json doc = {{"run", RunJson(run)},
                    {"reward", RewardJson(RewardConfig{})},
                    {"loss_weights", LossJson(LossWeights{})},
                    {"observation",
                     {{"long_stride", CommandOptions{}.long_stride},
                      {"segments", obs}}}};
  return doc.dump(2) + "\n";
}

}  // namespace motrack
