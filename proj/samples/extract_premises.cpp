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


// Prints strict premises and the generated QA pairs for each argument.

#include <cstdio>

#include "premise_forge/extraction.hpp"
#include "premise_forge/qgen.hpp"

int main(int argc, char **argv) {
  using namespace pforge;
  for (int i = 1; i < argc; ++i) {
    std::printf("%s\n", argv[i]);
    for (const auto &p : ExtractPremises(argv[i], ExtractionMode::Strict)) {
      std::printf("  %s\n", p.Canonical().c_str());
      for (const auto &qa : GenerateQa(p)) std::printf("    %s -> %s\n", qa.question.c_str(), qa.answer.c_str());
    }
  }
  return 0;
}
