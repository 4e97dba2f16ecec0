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

#ifndef PREMISE_FORGE_QUESTION_HPP
#define PREMISE_FORGE_QUESTION_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace pforge {

using ImageId = std::int64_t;
using QuestionId = std::int64_t;

// A visual question asked about one image.
struct Question {
  QuestionId question_id = 0;
  ImageId image_id = 0;
  std::string text;
  std::optional<std::string> answer;
  std::optional<std::string> split;

  friend bool operator==(const Question &, const Question &) = default;
};

}  // namespace pforge

#endif  // PREMISE_FORGE_QUESTION_HPP
