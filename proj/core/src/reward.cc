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

#include "motrack/reward.h"

#include <cmath>

#include "motrack/error.h"
#include "motrack/geometry.h"

namespace motrack {
namespace {

void CheckTerm(const KernelTerm& t, const char* name) {
  if (!(t.sigma > 0.0) || !std::isfinite(t.sigma)) {
    throw ValidationError(std::string("reward ") + name +
                          " sigma must be positive");
  }
  if (!(t.weight >= 0.0) || !std::isfinite(t.weight)) {
    throw ValidationError(std::string("reward ") + name +
                          " weight must be >= 0");
  }
}

void CheckPenalty(double w, const char* name) {
  if (!(w <= 0.0) || !std::isfinite(w)) {
    throw ValidationError(std::string("reward ") + name + " must be <= 0");
  }
}

double KernelOfMeanSquare(double mean_sq, double sigma) {
  return std::exp(-mean_sq / (sigma * sigma));
}

void CheckFrame(const RobotFrame& f, const char* side) {
  const std::size_t n = f.body_positions.size();
  if (f.body_orientations.size() != n || f.body_lin_vel.size() != n ||
      f.body_ang_vel.size() != n) {
    throw ShapeError(std::string(side) + " frame has inconsistent body fields");
  }
  if (f.anchor_index < 0 || static_cast<std::size_t>(f.anchor_index) >= n) {
    throw ShapeError(std::string(side) + " anchor index out of range");
  }
}

}  // namespace

void RewardConfig::Validate() const {
  CheckTerm(anchor_pos, "anchor_pos");
  CheckTerm(anchor_ori, "anchor_ori");
  CheckTerm(rel_body_pos, "rel_body_pos");
  CheckTerm(rel_body_ori, "rel_body_ori");
  CheckTerm(body_lin_vel, "body_lin_vel");
  CheckTerm(body_ang_vel, "body_ang_vel");
  CheckPenalty(action_rate_weight, "action_rate_weight");
  CheckPenalty(joint_limit_weight, "joint_limit_weight");
  CheckPenalty(contact_weight, "contact_weight");
  if (!(contact_force_threshold >= 0.0)) {
    throw ValidationError("reward contact_force_threshold must be >= 0");
  }
}

std::map<std::string, double> TaskRewardTerms::Named() const {
  return {{"anchor_pos", anchor_pos},     {"anchor_ori", anchor_ori},
          {"rel_body_pos", rel_body_pos}, {"rel_body_ori", rel_body_ori},
          {"body_lin_vel", body_lin_vel}, {"body_ang_vel", body_ang_vel}};
}

std::map<std::string, double> RegularizationTerms::Named() const {
  return {{"action_rate", action_rate},
          {"joint_limit", joint_limit},
          {"contacts", contacts}};
}

double QuatError(const Quat& q1, const Quat& q2) {
  if (!IsUnitQuaternion(q1) || !IsUnitQuaternion(q2)) {
    throw ValidationError("quaternion error needs unit quaternions");
  }
  // 2 acos(|<q1, q2>|), evaluated through atan2 for accuracy near zero.
  const Quat delta = q1.conjugate() * q2;
  return 2.0 * std::atan2(delta.vec().norm(), std::abs(delta.w()));
}

double Kernel(double d, double sigma) {
  return std::exp(-(d * d) / (sigma * sigma));
}

TaskRewardTerms TaskRewards(const RobotFrame& reference,
                            const RobotFrame& actual,
                            const RewardConfig& cfg) {
  CheckFrame(reference, "reference");
  CheckFrame(actual, "actual");
  const std::size_t n = reference.body_positions.size();
  if (actual.body_positions.size() != n) {
    throw ShapeError("reference has " + std::to_string(n) +
                     " bodies, actual has " +
                     std::to_string(actual.body_positions.size()));
  }
  if (reference.anchor_index != actual.anchor_index) {
    throw ShapeError("reference and actual disagree on the anchor body");
  }
  const int a = reference.anchor_index;
  const Vec3& pa = reference.body_positions[a];
  const Vec3& pa_hat = actual.body_positions[a];
  const Quat& qa = reference.body_orientations[a];
  const Quat& qa_hat = actual.body_orientations[a];

  TaskRewardTerms t;
  t.anchor_pos = cfg.anchor_pos.weight *
                 Kernel((pa - pa_hat).norm(), cfg.anchor_pos.sigma);
  t.anchor_ori = cfg.anchor_ori.weight *
                 Kernel(QuatError(qa, qa_hat), cfg.anchor_ori.sigma);

  double pos_sq = 0.0;
  double ori_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) == a) continue;
    const Vec3 rel = ToBodyFrame(qa, reference.body_positions[i] - pa);
    const Vec3 rel_hat = ToBodyFrame(qa_hat, actual.body_positions[i] - pa_hat);
    pos_sq += (rel - rel_hat).squaredNorm();
    const Quat qrel = reference.body_orientations[i] * qa.conjugate();
    const Quat qrel_hat = actual.body_orientations[i] * qa_hat.conjugate();
    const double ang = QuatError(qrel.normalized(), qrel_hat.normalized());
    ori_sq += ang * ang;
  }
  const double others = n > 1 ? static_cast<double>(n - 1) : 1.0;
  t.rel_body_pos = cfg.rel_body_pos.weight *
                   KernelOfMeanSquare(pos_sq / others, cfg.rel_body_pos.sigma);
  t.rel_body_ori = cfg.rel_body_ori.weight *
                   KernelOfMeanSquare(ori_sq / others, cfg.rel_body_ori.sigma);

  double lin_sq = 0.0;
  double ang_sq = 0.0;
  const bool anchor_frame = cfg.velocity_frame == VelocityFrame::kAnchor;
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 v = reference.body_lin_vel[i];
    Vec3 v_hat = actual.body_lin_vel[i];
    Vec3 w = reference.body_ang_vel[i];
    Vec3 w_hat = actual.body_ang_vel[i];
    if (anchor_frame) {
      v = ToBodyFrame(qa, v);
      v_hat = ToBodyFrame(qa_hat, v_hat);
      w = ToBodyFrame(qa, w);
      w_hat = ToBodyFrame(qa_hat, w_hat);
    }
    lin_sq += (v - v_hat).squaredNorm();
    ang_sq += (w - w_hat).squaredNorm();
  }
  const double bodies = static_cast<double>(n);
  t.body_lin_vel = cfg.body_lin_vel.weight *
                   KernelOfMeanSquare(lin_sq / bodies, cfg.body_lin_vel.sigma);
  t.body_ang_vel = cfg.body_ang_vel.weight *
                   KernelOfMeanSquare(ang_sq / bodies, cfg.body_ang_vel.sigma);

  t.total = t.anchor_pos + t.anchor_ori + t.rel_body_pos + t.rel_body_ori +
            t.body_lin_vel + t.body_ang_vel;
  return t;
}

TaskRewardTerms TaskRewards(const BodyStatePair& pair,
                            const RewardConfig& cfg) {
  return TaskRewards(pair.reference, pair.actual, cfg);
}

RegularizationTerms Regularization(const ControlStep& step,
                                   const RewardConfig& cfg) {
  if (step.action.size() != step.prev_action.size()) {
    throw ShapeError("action and previous action differ in width");
  }
  if (step.joint_pos.size() != step.joint_limits.size()) {
    throw ShapeError("one joint limit pair per joint position required");
  }
  RegularizationTerms r;
  double rate_sq = 0.0;
  for (std::size_t j = 0; j < step.action.size(); ++j) {
    const double d = step.action[j] - step.prev_action[j];
    rate_sq += d * d;
  }
  r.action_rate = cfg.action_rate_weight * rate_sq;

  int out_of_range = 0;
  for (std::size_t j = 0; j < step.joint_pos.size(); ++j) {
    const auto [lo, hi] = step.joint_limits[j];
    if (!(lo < hi)) {
      throw ValidationError("joint " + std::to_string(j) +
                            " limit has lo >= hi");
    }
    const double q = step.joint_pos[j];
    if (q < lo || q > hi) ++out_of_range;
  }
  r.joint_limit = cfg.joint_limit_weight * out_of_range;

  int bad_contacts = 0;
  for (const ContactReading& c : step.contacts) {
    if (c.force > cfg.contact_force_threshold &&
        !cfg.allowed_contact_bodies.count(c.body)) {
      ++bad_contacts;
    }
  }
  r.contacts = cfg.contact_weight * bad_contacts;
  r.total = r.action_rate + r.joint_limit + r.contacts;
  return r;
}

double TotalReward(const BodyStatePair& pair, const ControlStep& step,
                   const RewardConfig& cfg) {
  return TaskRewards(pair, cfg).total + Regularization(step, cfg).total;
}

}  // namespace motrack
