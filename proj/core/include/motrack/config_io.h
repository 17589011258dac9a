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

#ifndef MOTRACK_CONFIG_IO_H_
#define MOTRACK_CONFIG_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "motrack/reward.h"
#include "motrack/sim_harness.h"
#include "motrack/tokenizer.h"

namespace motrack {

// JSON configuration files. Unknown keys are rejected; missing optional keys
// keep their built-in defaults. Errors are ParseError naming the key path.
//
// Run configuration:
//   {
//     "iterations": 2000,          required
//     "batch_size": 4,             required
//     "seed": 7,
//     "mode": "adaptive" | "uniform",
//     "scheduler":  {"alpha", "beta", "w", "c", "gamma", "temperature",
//                    "eps_explore", "eps_num"},
//     "curriculum": {"enabled", "theta_pos", "theta_ang",
//                    "auto_advance_iters", "w_new", "min_level_ratio",
//                    "ramp_iters"},
//     "learner":    {"base_error": [10 values] | "linear": {"intercept",
//                    "slope"}, "learn_rate", "noise_std", "fail_threshold",
//                    "angle_per_meter"}
//   }
RunConfig ParseRunConfig(std::string_view text, const std::string& source);
RunConfig ReadRunConfig(const std::filesystem::path& path);
std::string RunConfigToJson(const RunConfig& cfg);

// Reward configuration: {"anchor_pos": {"weight", "sigma"}, ... ,
// "action_rate_weight", "joint_limit_weight", "contact_weight",
// "contact_force_threshold", "allowed_contact_bodies": [names],
// "velocity_frame": "world" | "anchor"}.
RewardConfig ParseRewardConfig(std::string_view text,
                               const std::string& source);
std::string RewardConfigToJson(const RewardConfig& cfg);

LossWeights ParseLossWeights(std::string_view text, const std::string& source);
std::string LossWeightsToJson(const LossWeights& weights);

// One control step: {"action": [...], "prev_action": [...],
// "joint_pos": [...], "joint_limits": [[lo, hi], ...],
// "contacts": [{"body": name, "force": N}, ...]}.
ControlStep ParseControlStep(std::string_view text, const std::string& source);

// Every built-in default as one JSON document with "run", "reward",
// "loss_weights" and "observation" sections.
std::string DefaultConfigJson();

}  // namespace motrack

#endif  // MOTRACK_CONFIG_IO_H_
