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

#include "motrack/motion_library.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "motrack/clip_io.h"
#include "motrack/error.h"

namespace motrack {

MotionLibrary::MotionLibrary(std::vector<MotionClip> clips,
                             std::vector<std::string> files)
    : clips_(std::move(clips)), files_(std::move(files)) {
  if (!files_.empty() && files_.size() != clips_.size()) {
    throw ShapeError("library: expected one file name per clip");
  }
  for (std::size_t i = 0; i < clips_.size(); ++i) {
    if (!index_.emplace(clips_[i].name, i).second) {
      throw ConflictError("duplicate clip name '" + clips_[i].name + "'" +
                          (files_.empty() ? std::string()
                                          : " in " + files_[i]));
    }
  }
}

std::optional<std::size_t> MotionLibrary::IndexOf(
    const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const MotionClip* MotionLibrary::Find(const std::string& name) const {
  auto i = IndexOf(name);
  return i ? &clips_[*i] : nullptr;
}

std::vector<int> MotionLibrary::Levels() const {
  std::vector<int> out;
  out.reserve(clips_.size());
  for (const MotionClip& c : clips_) out.push_back(c.difficulty);
  return out;
}

std::vector<ManifestEntry> MotionLibrary::Manifest() const {
  std::vector<ManifestEntry> out;
  for (std::size_t i = 0; i < clips_.size(); ++i) {
    out.push_back({files_.empty() ? clips_[i].name + kClipExtension : files_[i],
                   clips_[i].name, clips_[i].difficulty,
                   clips_[i].num_frames()});
  }
  return out;
}

MotionLibrary LoadLibrary(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) {
    throw Error("library path is not a directory: " + root.string());
  }
  std::vector<std::string> files;
  for (const fs::directory_entry& e : fs::directory_iterator(root)) {
    if (e.is_regular_file() && e.path().extension() == kClipExtension) {
      files.push_back(e.path().filename().string());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<MotionClip> clips;
  clips.reserve(files.size());
  for (const std::string& f : files) clips.push_back(ReadClip(root / f));
  MotionLibrary library(std::move(clips), files);

  const fs::path manifest_path = root / kManifestFileName;
  if (fs::exists(manifest_path)) {
    std::ifstream in(manifest_path);
    const std::vector<ManifestEntry> listed =
        ParseManifest(in, manifest_path.string());
    const std::vector<ManifestEntry> actual = library.Manifest();
    if (listed.size() != actual.size()) {
      throw ConflictError(manifest_path.string() + ": lists " +
                          std::to_string(listed.size()) + " clips, found " +
                          std::to_string(actual.size()) + " clip files");
    }
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (!(listed[i] == actual[i])) {
        throw ConflictError(manifest_path.string() + ": entry for '" +
                            listed[i].file + "' disagrees with " +
                            actual[i].file);
      }
    }
  }
  return library;
}

void SaveLibrary(const MotionLibrary& library,
                 const std::filesystem::path& root) {
  std::filesystem::create_directories(root);
  const std::vector<ManifestEntry> manifest = library.Manifest();
  for (std::size_t i = 0; i < library.size(); ++i) {
    SaveClip(library.clip(i), root / manifest[i].file);
  }
  std::ofstream out(root / kManifestFileName, std::ios::binary);
  if (!out) throw Error("cannot write manifest in " + root.string());
  WriteManifest(manifest, out);
}

void WriteManifest(const std::vector<ManifestEntry>& entries,
                   std::ostream& out) {
  out << "# file name difficulty frames\n";
  for (const ManifestEntry& e : entries) {
    out << e.file << ' ' << e.name << ' ' << e.difficulty << ' ' << e.frames
        << '\n';
  }
}

std::vector<ManifestEntry> ParseManifest(std::istream& in,
                                         const std::string& source) {
  std::vector<ManifestEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    ManifestEntry e;
    if (!(words >> e.file >> e.name >> e.difficulty >> e.frames)) {
      throw ParseError(source, "line " + std::to_string(line_no),
                       "expected 'file name difficulty frames'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace motrack
