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

#ifndef MOTRACK_ERROR_H_
#define MOTRACK_ERROR_H_

#include <stdexcept>
#include <string>

namespace motrack {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A clip, codebook, tensor or config file could not be parsed. The message
// names the file and the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, const std::string& field,
             const std::string& detail)
      : Error(file + ": field '" + field + "': " + detail),
        file_(file),
        field_(field) {}

  const std::string& file() const { return file_; }
  const std::string& field() const { return field_; }

 private:
  std::string file_;
  std::string field_;
};

// A parsed clip violates a domain invariant (difficulty range, unit
// quaternions, widths).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two clips in one library share a name, or a manifest disagrees with the
// clip files it lists.
class ConflictError : public Error {
 public:
  using Error::Error;
};

// Operand shapes disagree (codebook width, tensor shape, body counts).
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace motrack

#endif  // MOTRACK_ERROR_H_
