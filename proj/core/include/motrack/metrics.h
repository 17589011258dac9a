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

#ifndef MOTRACK_METRICS_H_
#define MOTRACK_METRICS_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "motrack/motion_clip.h"

namespace motrack {

// Reference and actual trajectories of equal length (>= 1) and equal body
// count. Views only; the frames must outlive the pair.
struct TrajectoryPair {
  std::span<const RobotFrame> reference;
  std::span<const RobotFrame> actual;
};

enum class AngleMetric {
  kJointAngle,    // |q_j - q_hat_j| over the 29 joints
  kBodyGeodesic,  // QuatError per body orientation
};

// Running sums for pooled means.
struct MetricSums {
  double pos = 0.0;
  std::size_t pos_count = 0;
  double ang = 0.0;
  std::size_t ang_count = 0;
  double vel = 0.0;
  std::size_t vel_count = 0;
  std::size_t frames = 0;

  void Merge(const MetricSums& other);
};

struct MetricValues {
  double mpjpe = 0.0;  // m
  double mpjae = 0.0;  // rad
  double mpjve = 0.0;  // rad/s
  std::size_t frames = 0;
};

MetricValues Means(const MetricSums& sums);

// All three sums for one pair. Throws ShapeError on length or body-count
// mismatch.
MetricSums Accumulate(const TrajectoryPair& pair,
                      AngleMetric angle = AngleMetric::kJointAngle);

double Mpjpe(const TrajectoryPair& pair);
double Mpjae(const TrajectoryPair& pair,
             AngleMetric angle = AngleMetric::kJointAngle);
double Mpjve(const TrajectoryPair& pair);

struct LabeledPair {
  std::string clip;
  int level = 1;
  TrajectoryPair pair;
};

enum class Pooling {
  kSamples,    // every (frame, joint) sample weighs the same
  kClipMeans,  // every clip weighs the same
};

struct MetricReport {
  MetricValues overall;
  std::vector<std::pair<std::string, MetricValues>> per_clip;
  std::map<int, MetricValues> per_level;  // only levels that have pairs
};

MetricReport PerLevelReport(std::span<const LabeledPair> pairs,
                            Pooling pooling = Pooling::kSamples,
                            AngleMetric angle = AngleMetric::kJointAngle);

// scope,name,level,mpjpe,mpjae,mpjve,frames with 6 decimals.
void WriteReportCsv(const MetricReport& report, std::ostream& out);
// Fixed-width table with one row per level and an "all" row.
void WriteReportTable(const MetricReport& report, std::ostream& out);

}  // namespace motrack

#endif  // MOTRACK_METRICS_H_
