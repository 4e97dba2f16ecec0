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

// Rewrites tests/fixtures/<corpus>/expected_tuples.jsonl from the
// brute-force enumerator. Run by hand after changing a fixture.

#include <fstream>
#include <iostream>

#include "support/test_support.hpp"

int main() {
  for (const auto &name : pftest::kCorpora) {
    const auto tuples = pftest::BruteForceBuild(pftest::LoadRaw(name));
    std::ofstream(pftest::FixturePath(name + "/expected_tuples.jsonl"), std::ios::binary)
        << pforge::TuplesToJsonl(tuples);
    std::cout << name << ": " << tuples.size() << " tuples\n";
  }
}
