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

#include "motrack/metrics.h"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "motrack/error.h"
#include "motrack/reward.h"

namespace motrack {
namespace {

std::string Fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void CheckPair(const TrajectoryPair& pair) {
  if (pair.reference.empty()) {
    throw ShapeError("trajectory pair needs at least one frame");
  }
  if (pair.reference.size() != pair.actual.size()) {
    throw ShapeError("reference has " + std::to_string(pair.reference.size()) +
                     " frames, actual has " +
                     std::to_string(pair.actual.size()));
  }
}

void CheckSameWidth(std::size_t a, std::size_t b, const char* field,
                    std::size_t frame) {
  if (a != b) {
    throw ShapeError(std::string(field) + " width differs at frame " +
                     std::to_string(frame));
  }
}

}  // namespace

void MetricSums::Merge(const MetricSums& other) {
  pos += other.pos;
  pos_count += other.pos_count;
  ang += other.ang;
  ang_count += other.ang_count;
  vel += other.vel;
  vel_count += other.vel_count;
  frames += other.frames;
}

MetricValues Means(const MetricSums& s) {
  MetricValues v;
  v.mpjpe = s.pos_count ? s.pos / static_cast<double>(s.pos_count) : 0.0;
  v.mpjae = s.ang_count ? s.ang / static_cast<double>(s.ang_count) : 0.0;
  v.mpjve = s.vel_count ? s.vel / static_cast<double>(s.vel_count) : 0.0;
  v.frames = s.frames;
  return v;
}

MetricSums Accumulate(const TrajectoryPair& pair, AngleMetric angle) {
  CheckPair(pair);
  MetricSums s;
  for (std::size_t t = 0; t < pair.reference.size(); ++t) {
    const RobotFrame& ref = pair.reference[t];
    const RobotFrame& act = pair.actual[t];
    CheckSameWidth(ref.body_positions.size(), act.body_positions.size(),
                   "body_pos", t);
    for (std::size_t b = 0; b < ref.body_positions.size(); ++b) {
      s.pos += (ref.body_positions[b] - act.body_positions[b]).norm();
    }
    s.pos_count += ref.body_positions.size();

    if (angle == AngleMetric::kJointAngle) {
      CheckSameWidth(ref.joint_pos.size(), act.joint_pos.size(), "joint_pos",
                     t);
      for (std::size_t j = 0; j < ref.joint_pos.size(); ++j) {
        s.ang += std::abs(ref.joint_pos[j] - act.joint_pos[j]);
      }
      s.ang_count += ref.joint_pos.size();
    } else {
      CheckSameWidth(ref.body_orientations.size(),
                     act.body_orientations.size(), "body_quat", t);
      for (std::size_t b = 0; b < ref.body_orientations.size(); ++b) {
        s.ang += QuatError(ref.body_orientations[b], act.body_orientations[b]);
      }
      s.ang_count += ref.body_orientations.size();
    }

    CheckSameWidth(ref.joint_vel.size(), act.joint_vel.size(), "joint_vel", t);
    for (std::size_t j = 0; j < ref.joint_vel.size(); ++j) {
      s.vel += std::abs(ref.joint_vel[j] - act.joint_vel[j]);
    }
    s.vel_count += ref.joint_vel.size();
    ++s.frames;
  }
  return s;
}

double Mpjpe(const TrajectoryPair& pair) { return Means(Accumulate(pair)).mpjpe; }

double Mpjae(const TrajectoryPair& pair, AngleMetric angle) {
  return Means(Accumulate(pair, angle)).mpjae;
}

double Mpjve(const TrajectoryPair& pair) { return Means(Accumulate(pair)).mpjve; }

MetricReport PerLevelReport(std::span<const LabeledPair> pairs,
                            Pooling pooling, AngleMetric angle) {
  MetricReport report;
  MetricSums all;
  std::map<int, MetricSums> level_sums;
  // Clip-mean pooling averages per-clip means instead of raw samples.
  MetricValues clip_mean_all;
  std::map<int, std::pair<MetricValues, int>> level_clip_means;

  for (const LabeledPair& lp : pairs) {
    const MetricSums s = Accumulate(lp.pair, angle);
    const MetricValues v = Means(s);
    report.per_clip.emplace_back(lp.clip, v);
    all.Merge(s);
    level_sums[lp.level].Merge(s);

    clip_mean_all.mpjpe += v.mpjpe;
    clip_mean_all.mpjae += v.mpjae;
    clip_mean_all.mpjve += v.mpjve;
    clip_mean_all.frames += v.frames;
    auto& [lv, count] = level_clip_means[lp.level];
    lv.mpjpe += v.mpjpe;
    lv.mpjae += v.mpjae;
    lv.mpjve += v.mpjve;
    lv.frames += v.frames;
    ++count;
  }

  if (pooling == Pooling::kSamples) {
    report.overall = Means(all);
    for (const auto& [level, s] : level_sums) report.per_level[level] = Means(s);
  } else {
    auto divide = [](MetricValues v, double n) {
      if (n > 0) {
        v.mpjpe /= n;
        v.mpjae /= n;
        v.mpjve /= n;
      }
      return v;
    };
    report.overall = divide(clip_mean_all, static_cast<double>(pairs.size()));
    for (const auto& [level, vc] : level_clip_means) {
      report.per_level[level] = divide(vc.first, vc.second);
    }
  }
  return report;
}

void WriteReportCsv(const MetricReport& report, std::ostream& out) {
  out << "scope,name,level,mpjpe,mpjae,mpjve,frames\n";
  auto row = [&](const std::string& scope, const std::string& name,
                 const std::string& level, const MetricValues& v) {
    out << scope << ',' << name << ',' << level << ',' << Fixed6(v.mpjpe)
        << ',' << Fixed6(v.mpjae) << ',' << Fixed6(v.mpjve) << ',' << v.frames
        << '\n';
  };
  row("overall", "all", "", report.overall);
  for (const auto& [level, v] : report.per_level) {
    row("level", "level_" + std::to_string(level), std::to_string(level), v);
  }
  for (const auto& [clip, v] : report.per_clip) row("clip", clip, "", v);
}

void WriteReportTable(const MetricReport& report, std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %12s %12s %14s %8s\n", "Subset",
                "MPJPE (m)", "MPJAE (rad)", "MPJVE (rad/s)", "Frames");
  out << line;
  auto row = [&](const std::string& label, const MetricValues& v) {
    std::snprintf(line, sizeof(line), "%-10s %12.6f %12.6f %14.6f %8zu\n",
                  label.c_str(), v.mpjpe, v.mpjae, v.mpjve, v.frames);
    out << line;
  };
  for (const auto& [level, v] : report.per_level) {
    row("level " + std::to_string(level), v);
  }
  row("all", report.overall);
}

}  // namespace motrack
