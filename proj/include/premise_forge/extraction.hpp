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

#ifndef PREMISE_FORGE_EXTRACTION_HPP
#define PREMISE_FORGE_EXTRACTION_HPP

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "premise_forge/lexicon.hpp"
#include "premise_forge/premise.hpp"
#include "premise_forge/question.hpp"
#include "premise_forge/scene_graph.hpp"
#include "premise_forge/tokenizer.hpp"

namespace pforge {

enum class ExtractionMode {
  // Existential and counting questions yield no premises.
  Strict,
  // Every question is processed; answer-dependent predicates are dropped.
  NonStrict,
};

// Drops premises mentioning a stoplist lemma, then duplicates (first
// occurrence wins). The stoplist must cover the basic image-referring words.
inline std::vector<Premise> FilterPremises(const std::vector<Premise> &premises, const LemmaSet &stoplist) {
  for (const char *required : {"photo", "image", "picture", "photograph"}) {
    if (!stoplist.Contains(required)) {
      throw InvalidArgument(std::string("stoplist is missing '") + required + "'");
    }
  }
  std::vector<Premise> out;
  std::unordered_set<std::string> seen;
  for (const auto &p : premises) {
    bool stopped = false;
    for (const auto &part : p.parts()) {
      if (stoplist.Contains(part)) stopped = true;
    }
    if (stopped) continue;
    if (!seen.insert(p.Canonical()).second) continue;
    out.push_back(p);
  }
  return out;
}

// Converts a scene graph to premises: objects -> first order, attributes ->
// second order, relations -> third order, in graph order.
inline std::vector<Premise> GraphPremises(const SceneGraph &graph, bool keep_answer_dependent) {
  std::vector<Premise> out;
  for (const auto &o : graph.objects) out.emplace_back(o.lemma);
  for (const auto &a : graph.attributes) {
    if (a.answer_dependent && !keep_answer_dependent) continue;
    out.emplace_back(graph.objects[a.object].lemma, a.lemma);
  }
  for (const auto &r : graph.relations) {
    if (r.answer_dependent && !keep_answer_dependent) continue;
    out.emplace_back(graph.objects[r.subject].lemma, r.lemma, graph.objects[r.object].lemma);
  }
  return out;
}

inline std::vector<Premise> ExtractPremises(std::string_view text, ExtractionMode mode,
                                            const LanguageResources &res = LanguageResources::Bundled()) {
  const auto tokens = TokenizeAndTag(text, res.lexicon);
  if (mode == ExtractionMode::Strict && ClassifyQuestion(tokens) != QuestionClass::Other) return {};
  return FilterPremises(GraphPremises(ParseSceneGraph(tokens, res), false), res.stoplist);
}

inline std::vector<Premise> ExtractPremises(const Question &question, ExtractionMode mode,
                                            const LanguageResources &res = LanguageResources::Bundled()) {
  return ExtractPremises(question.text, mode, res);
}

inline QuestionClass ClassifyQuestion(std::string_view text,
                                      const LanguageResources &res = LanguageResources::Bundled()) {
  return ClassifyQuestion(TokenizeAndTag(text, res.lexicon));
}

}  // namespace pforge

#endif  // PREMISE_FORGE_EXTRACTION_HPP
