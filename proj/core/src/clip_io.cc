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

#include "motrack/clip_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

#include "motrack/error.h"

namespace motrack {
namespace {

constexpr std::string_view kMagic = "motrack-clip";
constexpr int kFormatVersion = 1;

std::vector<std::string> SplitWords(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

bool IsBlankOrComment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

double ParseDouble(const std::string& text, const std::string& source,
                   const std::string& field) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(source, field, "not a number: '" + text + "'");
  }
  return value;
}

long ParseInt(const std::string& text, const std::string& source,
              const std::string& field) {
  long value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(source, field, "not an integer: '" + text + "'");
  }
  return value;
}

struct FieldSpec {
  std::string name;
  int width;
};

int RobotFieldWidth(const std::string& field, int bodies) {
  if (field == "joint_pos" || field == "joint_vel") return kNumJoints;
  if (field == "body_pos" || field == "body_lin_vel" ||
      field == "body_ang_vel") {
    return 3 * bodies;
  }
  if (field == "body_quat") return 4 * bodies;
  return -1;
}

int HumanFieldWidth(const std::string& field) {
  if (field == "pose") return kSmplPoseDims;
  if (field == "trans") return kSmplTransDims;
  return -1;
}

// Reads `count` consecutive numbers from `tokens` starting at `pos`.
class RowReader {
 public:
  RowReader(const std::vector<std::string>& tokens, const std::string& source,
            std::size_t frame)
      : tokens_(tokens), source_(source), frame_(frame) {}

  double Next(const std::string& field) {
    return ParseDouble(tokens_[pos_++], source_,
                       "frames[" + std::to_string(frame_) + "]." + field);
  }

 private:
  const std::vector<std::string>& tokens_;
  const std::string& source_;
  std::size_t frame_;
  std::size_t pos_ = 0;
};

void ReadVec3s(RowReader& row, const std::string& field, int bodies,
               std::vector<Vec3>& out) {
  out.resize(bodies);
  for (int b = 0; b < bodies; ++b) {
    for (int k = 0; k < 3; ++k) out[b][k] = row.Next(field);
  }
}

void WriteRow(std::ostream& out, bool& first, double v) {
  if (!first) out << ' ';
  first = false;
  out << FormatExact(v);
}

}  // namespace

std::string FormatExact(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

MotionClip ParseClip(std::istream& in, const std::string& source) {
  std::string line;
  bool saw_magic = false;
  std::map<std::string, std::vector<std::string>> header;
  while (std::getline(in, line)) {
    if (IsBlankOrComment(line)) continue;
    std::vector<std::string> words = SplitWords(line);
    if (!saw_magic) {
      if (words.size() != 2 || words[0] != kMagic ||
          words[1] != std::to_string(kFormatVersion)) {
        throw ParseError(source, "magic",
                         "expected 'motrack-clip 1' as the first line");
      }
      saw_magic = true;
      continue;
    }
    if (words[0] == "data") break;
    const std::string key = words[0];
    words.erase(words.begin());
    if (!header.emplace(key, std::move(words)).second) {
      throw ParseError(source, key, "duplicate header key");
    }
  }
  if (!saw_magic) throw ParseError(source, "magic", "empty file");

  static const char* const kKnownKeys[] = {
      "name",   "fps",        "difficulty", "frames", "layout",
      "bodies", "anchor",     "body_names", "key_bodies", "fields",
      "joints"};
  for (const auto& [key, _] : header) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) throw ParseError(source, key, "unknown header key");
  }
  auto single = [&](const std::string& key) -> const std::string& {
    auto it = header.find(key);
    if (it == header.end()) throw ParseError(source, key, "missing");
    if (it->second.size() != 1) {
      throw ParseError(source, key, "expected exactly one value");
    }
    return it->second.front();
  };

  MotionClip clip;
  clip.name = single("name");
  clip.fps = ParseDouble(single("fps"), source, "fps");
  clip.difficulty =
      static_cast<int>(ParseInt(single("difficulty"), source, "difficulty"));
  const long frame_count = ParseInt(single("frames"), source, "frames");
  if (frame_count < 0) throw ParseError(source, "frames", "negative count");

  const std::string& kind = single("layout");
  if (kind == "robot") {
    int bodies = kDefaultNumBodies;
    if (header.count("bodies")) {
      bodies = static_cast<int>(ParseInt(single("bodies"), source, "bodies"));
      if (bodies < 1) throw ParseError(source, "bodies", "must be >= 1");
    }
    if (header.count("joints") &&
        ParseInt(single("joints"), source, "joints") != kNumJoints) {
      throw ParseError(source, "joints", "robot clips carry 29 joints");
    }
    clip.layout = ClipLayout::Robot(bodies);
    if (header.count("anchor")) {
      clip.layout.anchor_index =
          static_cast<int>(ParseInt(single("anchor"), source, "anchor"));
    }
    if (auto it = header.find("body_names"); it != header.end()) {
      clip.layout.body_names = it->second;
    }
    if (auto it = header.find("key_bodies"); it != header.end()) {
      clip.layout.key_bodies.clear();
      for (const std::string& w : it->second) {
        clip.layout.key_bodies.push_back(
            static_cast<int>(ParseInt(w, source, "key_bodies")));
      }
    }
  } else if (kind == "human") {
    clip.layout = ClipLayout::Human();
    for (const char* k : {"bodies", "anchor", "body_names", "key_bodies"}) {
      if (header.count(k)) {
        throw ParseError(source, k, "not allowed in a human clip");
      }
    }
  } else {
    throw ParseError(source, "layout", "expected 'robot' or 'human'");
  }

  auto fields_it = header.find("fields");
  if (fields_it == header.end()) throw ParseError(source, "fields", "missing");
  std::vector<FieldSpec> fields;
  int row_width = 0;
  const bool robot = clip.layout.kind == ClipKind::kRobot;
  for (const std::string& f : fields_it->second) {
    const int w = robot ? RobotFieldWidth(f, clip.layout.num_bodies)
                        : HumanFieldWidth(f);
    if (w < 0) throw ParseError(source, "fields", "unknown field '" + f + "'");
    for (const FieldSpec& prev : fields) {
      if (prev.name == f) {
        throw ParseError(source, "fields", "duplicate field '" + f + "'");
      }
    }
    fields.push_back({f, w});
    row_width += w;
  }
  auto has = [&](std::string_view name) {
    for (const FieldSpec& f : fields) {
      if (f.name == name) return true;
    }
    return false;
  };
  const std::vector<std::string> required =
      robot ? std::vector<std::string>{"joint_pos", "body_pos", "body_quat"}
            : std::vector<std::string>{"pose", "trans"};
  for (const std::string& r : required) {
    if (!has(r)) throw ParseError(source, "fields", "missing field '" + r + "'");
  }

  const int bodies = clip.layout.num_bodies;
  std::size_t frame = 0;
  while (std::getline(in, line)) {
    if (IsBlankOrComment(line)) continue;
    const std::vector<std::string> tokens = SplitWords(line);
    if (static_cast<long>(frame) >= frame_count) {
      throw ParseError(source, "frames",
                       "more data rows than the declared " +
                           std::to_string(frame_count));
    }
    if (static_cast<int>(tokens.size()) != row_width) {
      throw ParseError(source, "frames[" + std::to_string(frame) + "]",
                       "expected " + std::to_string(row_width) +
                           " values, got " + std::to_string(tokens.size()));
    }
    RowReader row(tokens, source, frame);
    if (robot) {
      RobotFrame fr;
      fr.anchor_index = clip.layout.anchor_index;
      for (const FieldSpec& f : fields) {
        if (f.name == "joint_pos" || f.name == "joint_vel") {
          auto& dst = f.name == "joint_pos" ? fr.joint_pos : fr.joint_vel;
          dst.resize(kNumJoints);
          for (double& v : dst) v = row.Next(f.name);
        } else if (f.name == "body_pos") {
          ReadVec3s(row, f.name, bodies, fr.body_positions);
        } else if (f.name == "body_lin_vel") {
          ReadVec3s(row, f.name, bodies, fr.body_lin_vel);
        } else if (f.name == "body_ang_vel") {
          ReadVec3s(row, f.name, bodies, fr.body_ang_vel);
        } else if (f.name == "body_quat") {
          fr.body_orientations.resize(bodies);
          for (int b = 0; b < bodies; ++b) {
            const double w = row.Next(f.name);
            const double x = row.Next(f.name);
            const double y = row.Next(f.name);
            const double z = row.Next(f.name);
            fr.body_orientations[b] = Quat(w, x, y, z);
          }
        }
      }
      clip.frames.push_back(std::move(fr));
    } else {
      HumanMotionFrame fr;
      for (const FieldSpec& f : fields) {
        if (f.name == "pose") {
          for (double& v : fr.pose) v = row.Next(f.name);
        } else {
          for (double& v : fr.translation) v = row.Next(f.name);
        }
      }
      clip.human_frames.push_back(fr);
    }
    ++frame;
  }
  if (static_cast<long>(frame) != frame_count) {
    throw ParseError(source, "frames",
                     "declared " + std::to_string(frame_count) +
                         " frames but found " + std::to_string(frame));
  }

  if (robot) {
    const bool joint_vel = has("joint_vel");
    const bool lin_vel = has("body_lin_vel");
    const bool ang_vel = has("body_ang_vel");
    if (!(joint_vel && lin_vel && ang_vel) && !clip.frames.empty()) {
      if (clip.frames.size() >= 2) {
        const MotionClip diffed = FiniteDifferenceVelocities(clip);
        for (std::size_t t = 0; t < clip.frames.size(); ++t) {
          RobotFrame& dst = clip.frames[t];
          const RobotFrame& src = diffed.frames[t];
          if (!joint_vel) dst.joint_vel = src.joint_vel;
          if (!lin_vel) dst.body_lin_vel = src.body_lin_vel;
          if (!ang_vel) dst.body_ang_vel = src.body_ang_vel;
        }
      } else {
        // A single pose is a static hold.
        RobotFrame& dst = clip.frames.front();
        if (!joint_vel) dst.joint_vel.assign(kNumJoints, 0.0);
        if (!lin_vel) dst.body_lin_vel.assign(bodies, Vec3::Zero());
        if (!ang_vel) dst.body_ang_vel.assign(bodies, Vec3::Zero());
      }
    }
    clip.layout.has_joint_vel = true;
    clip.layout.has_body_vel = true;
  }

  const std::vector<Violation> violations = ValidateClip(clip);
  if (!violations.empty()) {
    std::string msg = source + ": invalid clip";
    for (const Violation& v : violations) msg += "\n  " + v.ToString();
    throw ValidationError(msg);
  }
  return clip;
}

MotionClip ReadClip(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open clip file " + path.string());
  return ParseClip(in, path.string());
}

void WriteClip(const MotionClip& clip, std::ostream& out) {
  const ClipLayout& layout = clip.layout;
  const bool robot = layout.kind == ClipKind::kRobot;
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "name " << clip.name << '\n';
  out << "fps " << FormatExact(clip.fps) << '\n';
  out << "difficulty " << clip.difficulty << '\n';
  out << "frames " << clip.num_frames() << '\n';
  std::vector<std::string> fields;
  if (robot) {
    out << "layout robot\n";
    out << "bodies " << layout.num_bodies << '\n';
    out << "anchor " << layout.anchor_index << '\n';
    out << "body_names";
    for (const std::string& n : layout.body_names) out << ' ' << n;
    out << '\n';
    if (!layout.key_bodies.empty()) {
      out << "key_bodies";
      for (int k : layout.key_bodies) out << ' ' << k;
      out << '\n';
    }
    fields.push_back("joint_pos");
    if (layout.has_joint_vel) fields.push_back("joint_vel");
    fields.push_back("body_pos");
    fields.push_back("body_quat");
    if (layout.has_body_vel) {
      fields.push_back("body_lin_vel");
      fields.push_back("body_ang_vel");
    }
  } else {
    out << "layout human\n";
    fields = {"pose", "trans"};
  }
  out << "fields";
  for (const std::string& f : fields) out << ' ' << f;
  out << "\ndata\n";

  if (robot) {
    for (const RobotFrame& fr : clip.frames) {
      bool first = true;
      for (double v : fr.joint_pos) WriteRow(out, first, v);
      if (layout.has_joint_vel) {
        for (double v : fr.joint_vel) WriteRow(out, first, v);
      }
      for (const Vec3& p : fr.body_positions) {
        for (int k = 0; k < 3; ++k) WriteRow(out, first, p[k]);
      }
      for (const Quat& q : fr.body_orientations) {
        WriteRow(out, first, q.w());
        WriteRow(out, first, q.x());
        WriteRow(out, first, q.y());
        WriteRow(out, first, q.z());
      }
      if (layout.has_body_vel) {
        for (const Vec3& v : fr.body_lin_vel) {
          for (int k = 0; k < 3; ++k) WriteRow(out, first, v[k]);
        }
        for (const Vec3& v : fr.body_ang_vel) {
          for (int k = 0; k < 3; ++k) WriteRow(out, first, v[k]);
        }
      }
      out << '\n';
    }
  } else {
    for (const HumanMotionFrame& fr : clip.human_frames) {
      bool first = true;
      for (double v : fr.pose) WriteRow(out, first, v);
      for (double v : fr.translation) WriteRow(out, first, v);
      out << '\n';
    }
  }
}

std::string SerializeClip(const MotionClip& clip) {
  std::ostringstream out;
  WriteClip(clip, out);
  return out.str();
}

void SaveClip(const MotionClip& clip, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write clip file " + path.string());
  WriteClip(clip, out);
}

Eigen::MatrixXd ParseMatrix(std::istream& in, const std::string& source) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (IsBlankOrComment(line)) continue;
    header = SplitWords(line);
    break;
  }
  if (header.size() != 2) {
    throw ParseError(source, "header", "expected 'rows cols'");
  }
  const long rows = ParseInt(header[0], source, "rows");
  const long cols = ParseInt(header[1], source, "cols");
  if (rows < 0 || cols < 0) {
    throw ParseError(source, "header", "negative dimension");
  }
  Eigen::MatrixXd m(rows, cols);
  long r = 0;
  while (std::getline(in, line)) {
    if (IsBlankOrComment(line)) continue;
    const std::vector<std::string> tokens = SplitWords(line);
    const std::string field = "row " + std::to_string(r);
    if (r >= rows) throw ParseError(source, field, "more rows than declared");
    if (static_cast<long>(tokens.size()) != cols) {
      throw ParseError(source, field,
                       "expected " + std::to_string(cols) + " values, got " +
                           std::to_string(tokens.size()));
    }
    for (long c = 0; c < cols; ++c) {
      m(r, c) = ParseDouble(tokens[c], source, field);
    }
    ++r;
  }
  if (r != rows) {
    throw ParseError(source, "rows",
                     "declared " + std::to_string(rows) + " rows but found " +
                         std::to_string(r));
  }
  return m;
}

Eigen::MatrixXd ReadMatrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file " + path.string());
  return ParseMatrix(in, path.string());
}

void WriteMatrix(const Eigen::MatrixXd& m, std::ostream& out) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    bool first = true;
    for (Eigen::Index c = 0; c < m.cols(); ++c) WriteRow(out, first, m(r, c));
    out << '\n';
  }
}

void SaveMatrix(const Eigen::MatrixXd& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write matrix file " + path.string());
  WriteMatrix(m, out);
}

}  // namespace motrack
