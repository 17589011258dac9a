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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace motrack::testing {
namespace {

using Q = std::array<long double, 4>;  // w x y z

Q ToQ(const Quat& q) { return {q.w(), q.x(), q.y(), q.z()}; }

Q Mul(const Q& a, const Q& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Q Conj(const Q& q) { return {q[0], -q[1], -q[2], -q[3]}; }

// Rotates v by q: q v q*.
std::array<long double, 3> Rotate(const Q& q, const Vec3& v) {
  const Q p = {0.0L, v.x(), v.y(), v.z()};
  const Q r = Mul(Mul(q, p), Conj(q));
  return {r[1], r[2], r[3]};
}

long double Angle(const Q& a, const Q& b) {
  long double dot = 0.0L;
  long double na = 0.0L;
  long double nb = 0.0L;
  for (int k = 0; k < 4; ++k) {
    dot += a[k] * b[k];
    na += a[k] * a[k];
    nb += b[k] * b[k];
  }
  const long double c = std::min(1.0L, std::fabs(dot) / std::sqrt(na * nb));
  return 2.0L * std::acos(c);
}

double WeightedKernel(const KernelTerm& t, long double sq) {
  return static_cast<double>(t.weight *
                             std::exp(-sq / (static_cast<long double>(t.sigma) *
                                             t.sigma)));
}

}  // namespace

double OracleScore(double error, double success, double failure,
                   const SchedulerConfig& cfg) {
  double normalized = error / cfg.c;
  if (normalized < 0.0) normalized = 0.0;
  if (normalized > 1.0) normalized = 1.0;
  const double prob = success / (success + failure + cfg.eps_num);
  return (1.0 - cfg.w) * normalized + cfg.w * (1.0 - prob);
}

std::vector<double> OracleDistribution(const std::vector<double>& scores,
                                       const SchedulerConfig& cfg) {
  const long double power =
      static_cast<long double>(cfg.gamma) / cfg.temperature;
  std::vector<long double> e;
  long double z = 0.0L;
  for (double r : scores) {
    e.push_back(std::pow(static_cast<long double>(r) + cfg.eps_num, power));
    z += e.back();
  }
  const long double n = scores.size();
  std::vector<double> p;
  for (long double v : e) {
    p.push_back(static_cast<double>((1.0L - cfg.eps_explore) * v / z +
                                    cfg.eps_explore / n));
  }
  return p;
}

std::vector<double> OracleFloorProjection(const std::vector<double>& masses,
                                          double floor) {
  const std::size_t n = masses.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return masses[a] < masses[b];
  });
  for (std::size_t k = 0; k <= n; ++k) {
    long double rest = 0.0L;
    for (std::size_t j = k; j < n; ++j) rest += masses[order[j]];
    const long double scale = rest > 0.0L ? (1.0L - k * floor) / rest : 0.0L;
    bool ok = true;
    for (std::size_t j = k; j < n; ++j) {
      if (masses[order[j]] * scale < floor) ok = false;
    }
    if (!ok) continue;
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
      out[order[j]] = j < k ? floor
                            : static_cast<double>(masses[order[j]] * scale);
    }
    return out;
  }
  return std::vector<double>(n, floor);
}

NearestCode OracleNearest(const Eigen::MatrixXd& codebook,
                          const Eigen::MatrixXd& latents, int row) {
  NearestCode best;
  for (int k = 0; k < codebook.rows(); ++k) {
    long double d = 0.0L;
    for (int j = 0; j < codebook.cols(); ++j) {
      const long double diff =
          static_cast<long double>(latents(row, j)) - codebook(k, j);
      d += diff * diff;
    }
    if (best.index < 0 || d < best.sq_dist) {
      best.index = k;
      best.sq_dist = static_cast<double>(d);
    }
  }
  return best;
}

OracleLossTerms OracleLoss(const Eigen::MatrixXd& gt,
                           const Eigen::MatrixXd& recon, double commit,
                           double fps, const LossWeights& w) {
  const int frames = static_cast<int>(gt.rows());
  long double all = 0.0L;
  long double rot = 0.0L;
  long double trans = 0.0L;
  for (int t = 0; t < frames; ++t) {
    for (int j = 0; j < 69; ++j) {
      const long double d = std::fabs(static_cast<long double>(gt(t, j)) -
                                      recon(t, j));
      all += d;
      if (j < 3) rot += d;
      if (j >= 66) trans += d;
    }
  }
  long double vel = 0.0L;
  for (int t = 0; t + 1 < frames; ++t) {
    for (int j = 0; j < 69; ++j) {
      const long double vg =
          (static_cast<long double>(gt(t + 1, j)) - gt(t, j)) * fps;
      const long double vr =
          (static_cast<long double>(recon(t + 1, j)) - recon(t, j)) * fps;
      vel += std::fabs(vg - vr);
    }
  }
  OracleLossTerms o;
  o.recons = static_cast<double>(all / (frames * 69.0L));
  o.rot = static_cast<double>(rot / (frames * 3.0L));
  o.trans = static_cast<double>(trans / (frames * 3.0L));
  o.vel = frames > 1 ? static_cast<double>(vel / ((frames - 1) * 69.0L)) : 0.0;
  o.commit = commit;
  o.total = w.recons * o.recons + w.commit * o.commit + w.vel * o.vel +
            w.root_rot * o.rot + w.root_pos * o.trans;
  return o;
}

double OracleGeodesic(const Quat& q1, const Quat& q2) {
  return static_cast<double>(Angle(ToQ(q1), ToQ(q2)));
}

std::array<double, 6> OracleTaskTerms(const RobotFrame& ref,
                                      const RobotFrame& act,
                                      const RewardConfig& cfg) {
  const int a = ref.anchor_index;
  const int n = ref.num_bodies();
  const Q qa = ToQ(ref.body_orientations[a]);
  const Q qa_hat = ToQ(act.body_orientations[a]);

  long double anchor_sq = 0.0L;
  for (int k = 0; k < 3; ++k) {
    const long double d = static_cast<long double>(ref.body_positions[a][k]) -
                          act.body_positions[a][k];
    anchor_sq += d * d;
  }
  const long double anchor_ang = Angle(qa, qa_hat);

  long double pos_sq = 0.0L;
  long double ori_sq = 0.0L;
  for (int i = 0; i < n; ++i) {
    if (i == a) continue;
    const auto rel = Rotate(qa, ref.body_positions[i] - ref.body_positions[a]);
    const auto rel_hat =
        Rotate(qa_hat, act.body_positions[i] - act.body_positions[a]);
    for (int k = 0; k < 3; ++k) {
      pos_sq += (rel[k] - rel_hat[k]) * (rel[k] - rel_hat[k]);
    }
    const Q r = Mul(ToQ(ref.body_orientations[i]), Conj(qa));
    const Q r_hat = Mul(ToQ(act.body_orientations[i]), Conj(qa_hat));
    const long double ang = Angle(r, r_hat);
    ori_sq += ang * ang;
  }
  long double lin_sq = 0.0L;
  long double ang_sq = 0.0L;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) {
      const long double dv =
          static_cast<long double>(ref.body_lin_vel[i][k]) - act.body_lin_vel[i][k];
      const long double dw =
          static_cast<long double>(ref.body_ang_vel[i][k]) - act.body_ang_vel[i][k];
      lin_sq += dv * dv;
      ang_sq += dw * dw;
    }
  }
  const long double others = n > 1 ? n - 1 : 1;
  return {WeightedKernel(cfg.anchor_pos, anchor_sq),
          WeightedKernel(cfg.anchor_ori, anchor_ang * anchor_ang),
          WeightedKernel(cfg.rel_body_pos, pos_sq / others),
          WeightedKernel(cfg.rel_body_ori, ori_sq / others),
          WeightedKernel(cfg.body_lin_vel, lin_sq / n),
          WeightedKernel(cfg.body_ang_vel, ang_sq / n)};
}

OracleMetricValues OraclePooledMetrics(
    const std::vector<std::vector<RobotFrame>>& refs,
    const std::vector<std::vector<RobotFrame>>& acts) {
  long double pos = 0.0L;
  long double ang = 0.0L;
  long double vel = 0.0L;
  long double pos_n = 0.0L;
  long double joint_n = 0.0L;
  for (std::size_t c = 0; c < refs.size(); ++c) {
    for (std::size_t t = 0; t < refs[c].size(); ++t) {
      const RobotFrame& r = refs[c][t];
      const RobotFrame& a = acts[c][t];
      for (std::size_t b = 0; b < r.body_positions.size(); ++b) {
        long double sq = 0.0L;
        for (int k = 0; k < 3; ++k) {
          const long double d =
              static_cast<long double>(r.body_positions[b][k]) -
              a.body_positions[b][k];
          sq += d * d;
        }
        pos += std::sqrt(sq);
        pos_n += 1.0L;
      }
      for (std::size_t j = 0; j < r.joint_pos.size(); ++j) {
        ang += std::fabs(static_cast<long double>(r.joint_pos[j]) - a.joint_pos[j]);
        vel += std::fabs(static_cast<long double>(r.joint_vel[j]) - a.joint_vel[j]);
        joint_n += 1.0L;
      }
    }
  }
  return {static_cast<double>(pos / pos_n), static_cast<double>(ang / joint_n),
          static_cast<double>(vel / joint_n)};
}

std::vector<double> OracleForwardDifference(const std::vector<double>& x,
                                            double fps) {
  std::vector<double> v(x.size());
  for (std::size_t t = 0; t + 1 < x.size(); ++t) {
    v[t] = (x[t + 1] - x[t]) * fps;
  }
  if (x.size() >= 2) v.back() = v[x.size() - 2];
  return v;
}

}  // namespace motrack::testing
