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


// Builds question-relevance tuples over four hand-made images.

#include <cstdio>
#include <vector>

#include "premise_forge/qrpe.hpp"

int main() {
  using namespace pforge;
  AnnotationStore store;
  store.AddObjects(1, {"dog", "ball"});
  store.AddObjects(2, {"dog"});
  store.AddObjects(3, {"cat", "ball"});
  store.AddObjects(4, {"car"});
  FeatureStore features(2);
  features.Add(1, {0.0f, 0.0f});
  features.Add(2, {1.0f, 0.0f});
  features.Add(3, {0.0f, 2.0f});
  features.Add(4, {5.0f, 5.0f});
  const std::vector<Question> questions = {
      Question{1, 1, "What color is the dog?", std::nullopt, std::nullopt},
      Question{2, 1, "What color is the ball?", std::nullopt, std::nullopt},
  };
  for (const auto &t : BuildDataset(questions, store, features)) {
    std::printf("q%lld %s pos=%lld neg=%lld d=%.3f\n", static_cast<long long>(t.question_id),
                t.premise.Canonical().c_str(), static_cast<long long>(t.pos_image),
                static_cast<long long>(t.neg_image), t.distance);
  }
  return 0;
}
