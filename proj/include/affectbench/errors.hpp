// Copyright 2026 The Affectbench Authors
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

#ifndef AFFECTBENCH_ERRORS_HPP_
#define AFFECTBENCH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace affectbench {

// A class has too few samples to fit a per-class Gaussian.
class InsufficientDataError : public std::runtime_error {
 public:
  explicit InsufficientDataError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Input that makes the requested computation meaningless, e.g. normalizing
// visibilities when every raw distance is zero.
class DegenerateInputError : public std::runtime_error {
 public:
  explicit DegenerateInputError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  explicit ParseError(const std::string& msg)
      : std::runtime_error(msg), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Prediction rows do not cover the evaluated manifest subset.
class CoverageError : public std::runtime_error {
 public:
  explicit CoverageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Prediction row references a record id that is not in the manifest.
class ReferenceError : public std::runtime_error {
 public:
  explicit ReferenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace affectbench

#endif  // AFFECTBENCH_ERRORS_HPP_
