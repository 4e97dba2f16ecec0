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

#ifndef PREMISE_FORGE_EXPLANATION_HPP
#define PREMISE_FORGE_EXPLANATION_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "premise_forge/annotations.hpp"
#include "premise_forge/extraction.hpp"
#include "premise_forge/nn.hpp"
#include "premise_forge/premise.hpp"

namespace pforge {

struct Explanation {
  Premise premise;
  std::string sentence;

  friend bool operator==(const Explanation &, const Explanation &) = default;
};

inline Explanation ExplainPremise(const Premise &premise) {
  switch (premise.order()) {
    case Order::First: return {premise, "There is no " + premise.part(0) + " in the image."};
    case Order::Second: return {premise, "The " + premise.part(0) + " is not " + premise.part(1) + "."};
    case Order::Third: break;
  }
  throw InvalidArgument("unsupported premise order for explanation: " + premise.Canonical());
}

struct QuestionVerdict {
  std::vector<Explanation> explanations;  // one per false premise, in premise order
  bool relevant() const { return explanations.empty(); }
};

// `grounded` decides each first/second-order premise; third-order premises
// are not judged. Premises come from non-strict extraction so existential
// questions are explained too.
inline QuestionVerdict ExplainQuestion(std::string_view question, const std::function<bool(const Premise &)> &grounded,
                                       const LanguageResources &res = LanguageResources::Bundled()) {
  QuestionVerdict v;
  for (const auto &p : ExtractPremises(question, ExtractionMode::NonStrict, res)) {
    if (p.order() == Order::Third) continue;
    if (!grounded(p)) v.explanations.push_back(ExplainPremise(p));
  }
  return v;
}

inline QuestionVerdict ExplainQuestion(std::string_view question, const MlpModel &fpd, const EncodingSpec &spec,
                                       std::span<const float> image,
                                       const LanguageResources &res = LanguageResources::Bundled()) {
  return ExplainQuestion(question, [&](const Premise &p) { return FpdPredict(fpd, spec, p, image); }, res);
}

// Ground-truth variant: only premises the store marks False are explained.
inline QuestionVerdict ExplainQuestion(std::string_view question, const AnnotationStore &store, ImageId image,
                                       const LanguageResources &res = LanguageResources::Bundled()) {
  return ExplainQuestion(
      question, [&](const Premise &p) { return store.PremiseHolds(p, image) != TruthValue::False; }, res);
}

}  // namespace pforge

#endif  // PREMISE_FORGE_EXPLANATION_HPP
