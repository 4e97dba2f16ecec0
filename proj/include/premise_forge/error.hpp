// Copyright 2026 The Premise Forge Authors.
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

#ifndef PREMISE_FORGE_ERROR_HPP
#define PREMISE_FORGE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pforge {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or missing input data: unreadable files, malformed records, missing
// feature vectors. The CLI maps these to exit code 2.
class DataError : public Error {
 public:
  using Error::Error;

  DataError(const std::string &source, std::size_t line, const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// A caller violated an operation's precondition (wrong premise order,
// dimension mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace pforge

#endif  // PREMISE_FORGE_ERROR_HPP
