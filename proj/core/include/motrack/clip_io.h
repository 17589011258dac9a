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

#ifndef MOTRACK_CLIP_IO_H_
#define MOTRACK_CLIP_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "motrack/motion_clip.h"

namespace motrack {

// Clip file format (text, one clip per file, extension ".clip"):
//
//   motrack-clip 1
//   name <identifier>
//   fps <real>
//   difficulty <1..10>
//   frames <count>
//   layout robot|human
//   bodies <N>                    (robot; default 13)
//   anchor <index>                (robot; default 0)
//   body_names <N names>          (robot; default names for 13 bodies)
//   key_bodies <indices>          (robot; optional)
//   fields <field names>
//   data
//   <one line per frame: field values in `fields` order, row-major>
//
// Robot fields: joint_pos (29), joint_vel (29), body_pos (N*3),
// body_quat (N*4, w x y z), body_lin_vel (N*3), body_ang_vel (N*3).
// joint_pos, body_pos and body_quat are required; missing velocity fields
// are synthesized with FiniteDifferenceVelocities. Human fields: pose (66),
// trans (3). Lines starting with '#' are comments. Numbers are written in
// shortest round-trip form so save -> load -> save is byte-stable.

// Parses and validates one clip. Throws ParseError naming `source` and the
// field on malformed input, ValidationError on invariant violations.
MotionClip ParseClip(std::istream& in, const std::string& source);
MotionClip ReadClip(const std::filesystem::path& path);

void WriteClip(const MotionClip& clip, std::ostream& out);
std::string SerializeClip(const MotionClip& clip);
void SaveClip(const MotionClip& clip, const std::filesystem::path& path);

// Dense matrix file: a "rows cols" header line, then `rows` lines of `cols`
// numbers. Used for codebooks, latents and motion tensors.
Eigen::MatrixXd ReadMatrix(const std::filesystem::path& path);
Eigen::MatrixXd ParseMatrix(std::istream& in, const std::string& source);
void WriteMatrix(const Eigen::MatrixXd& m, std::ostream& out);
void SaveMatrix(const Eigen::MatrixXd& m, const std::filesystem::path& path);

// Shortest decimal text that parses back to exactly `v`.
std::string FormatExact(double v);

}  // namespace motrack

#endif  // MOTRACK_CLIP_IO_H_
