// Copyright 2026 The wignerlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace wignerlab {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point was passed that does not lie in the state space.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not available for this state-space backend.
class UnsupportedGeometry : public Error {
 public:
  using Error::Error;
};

/// An operation was called with inputs violating its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line` is 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string field = {}, int line = 0)
      : Error(format(message, field, line)), field_(std::move(field)), line_(line) {}

  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& message, const std::string& field, int line) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out + message;
  }

  std::string field_;
  int line_;
};

}  // namespace wignerlab
