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

#ifndef MOTRACK_MOTION_LIBRARY_H_
#define MOTRACK_MOTION_LIBRARY_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motrack/motion_clip.h"

namespace motrack {

inline constexpr char kManifestFileName[] = "manifest.txt";
inline constexpr char kClipExtension[] = ".clip";

struct ManifestEntry {
  std::string file;  // relative to the library root
  std::string name;
  int difficulty = kMinDifficulty;
  std::size_t frames = 0;

  bool operator==(const ManifestEntry&) const = default;
};

// An ordered, immutable set of uniquely named clips. Safe to share read-only
// across threads.
class MotionLibrary {
 public:
  MotionLibrary() = default;
  // Throws ConflictError on duplicate names. `files` is either empty or one
  // relative file name per clip.
  explicit MotionLibrary(std::vector<MotionClip> clips,
                         std::vector<std::string> files = {});

  std::size_t size() const { return clips_.size(); }
  bool empty() const { return clips_.empty(); }
  const std::vector<MotionClip>& clips() const { return clips_; }
  const MotionClip& clip(std::size_t i) const { return clips_.at(i); }
  const std::vector<std::string>& files() const { return files_; }

  std::optional<std::size_t> IndexOf(const std::string& name) const;
  const MotionClip* Find(const std::string& name) const;

  // Difficulty rating of each clip, in library order.
  std::vector<int> Levels() const;
  std::vector<ManifestEntry> Manifest() const;

 private:
  std::vector<MotionClip> clips_;
  std::vector<std::string> files_;
  std::map<std::string, std::size_t> index_;
};

// Loads every "*.clip" file under `root` (non-recursive) in lexicographic
// file-name order. When `root` holds a manifest it must agree with the clip
// files; otherwise ConflictError.
MotionLibrary LoadLibrary(const std::filesystem::path& root);

// Writes each clip to `<root>/<file>` plus the manifest. Clips without a
// recorded file name are written as "<name>.clip".
void SaveLibrary(const MotionLibrary& library,
                 const std::filesystem::path& root);

void WriteManifest(const std::vector<ManifestEntry>& entries,
                   std::ostream& out);
std::vector<ManifestEntry> ParseManifest(std::istream& in,
                                         const std::string& source);

}  // namespace motrack

#endif  // MOTRACK_MOTION_LIBRARY_H_
