// Copyright 2026 The Extrap Authors.
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

#ifndef EXTRAP_ERRORS_HPP_
#define EXTRAP_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace extrap {

// Base of all toolkit errors. Diagnostics render as "<module>: <message>"
// so a failing CLI run always names the subsystem that rejected the input.
class Error : public std::runtime_error {
 public:
  Error(std::string module_name, const std::string& message)
      : std::runtime_error(module_name + ": " + message),
        module_name_(std::move(module_name)) {}

  const std::string& module_name() const noexcept { return module_name_; }

 private:
  std::string module_name_;
};

// Precondition or contract violation on in-memory values. CLI exit code 3.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed, truncated, or unsupported file contents. CLI exit code 2.
// `byte_offset` is the position of the first offending byte, or -1 when the
// failure is not tied to a specific offset.
class FormatError : public Error {
 public:
  FormatError(std::string module_name, const std::string& message,
              std::int64_t byte_offset = -1)
      : Error(std::move(module_name),
              byte_offset >= 0
                  ? message + " (at byte " + std::to_string(byte_offset) + ")"
                  : message),
        byte_offset_(byte_offset) {}

  std::int64_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::int64_t byte_offset_;
};

// Bad command line or configuration input. CLI exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace extrap

#endif  // EXTRAP_ERRORS_HPP_
