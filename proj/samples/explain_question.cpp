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


// Explains a question against a set of premises assumed true.

#include <cstdio>
#include <set>
#include <string>

#include "premise_forge/explanation.hpp"

int main(int argc, char **argv) {
  using namespace pforge;
  const std::string question = argc > 1 ? argv[1] : "What color is the cat's tie?";
  std::set<Premise> grounded;
  for (int i = 2; i < argc; ++i) {
    if (auto p = Premise::Parse(argv[i])) grounded.insert(*p);
  }
  const auto v = ExplainQuestion(question, [&](const Premise &p) { return grounded.count(p) > 0; });
  if (v.explanations.empty()) std::printf("All premises hold.\n");
  for (const auto &e : v.explanations) std::printf("%s\n", e.sentence.c_str());
  return 0;
}
