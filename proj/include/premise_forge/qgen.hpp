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

#ifndef PREMISE_FORGE_QGEN_HPP
#define PREMISE_FORGE_QGEN_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "premise_forge/extraction.hpp"
#include "premise_forge/premise.hpp"
#include "premise_forge/question.hpp"
#include "premise_forge/spice.hpp"

namespace pforge {

enum class AnswerType { Yes, No, Number, Other };

inline std::string_view AnswerTypeName(AnswerType t) {
  switch (t) {
    case AnswerType::Yes: return "yes";
    case AnswerType::No: return "no";
    case AnswerType::Number: return "number";
    case AnswerType::Other: return "other";
  }
  return "other";
}

inline std::optional<AnswerType> ParseAnswerType(std::string_view name) {
  for (AnswerType t : {AnswerType::Yes, AnswerType::No, AnswerType::Number, AnswerType::Other}) {
    if (AnswerTypeName(t) == name) return t;
  }
  return std::nullopt;
}

// "yes" -> Yes, "no" -> No, digits or a number word -> Number, else Other.
inline AnswerType ClassifyAnswer(std::string_view answer) {
  const std::string a = ToLower(Trim(answer));
  if (a == "yes") return AnswerType::Yes;
  if (a == "no") return AnswerType::No;
  if (!a.empty() && std::all_of(a.begin(), a.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return AnswerType::Number;
  }
  static constexpr std::string_view kNumberWords[] = {
      "zero", "one", "two",   "three",  "four",   "five",     "six",     "seven",
      "eight", "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
      "sixteen", "seventeen", "eighteen", "nineteen", "twenty"};
  for (auto w : kNumberWords) {
    if (a == w) return AnswerType::Number;
  }
  return AnswerType::Other;
}

struct QAPair {
  std::string question;
  std::string answer;
  AnswerType answer_type = AnswerType::Other;
  Premise source_premise;
  QuestionId source_question_id = 0;
  ImageId image_id = 0;

  friend bool operator==(const QAPair &, const QAPair &) = default;
};

namespace detail {

inline std::uint64_t Fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string WithArticle(const std::string &noun) {
  const char c = noun.empty() ? 'x' : noun.front();
  const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + noun;
}

inline QAPair MakePair(std::string question, std::string answer, const Premise &premise) {
  QAPair qa;
  qa.question = std::move(question);
  qa.answer_type = ClassifyAnswer(answer);
  qa.answer = std::move(answer);
  qa.source_premise = premise;
  return qa;
}

inline std::string NormalizeQuestionText(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : Trim(text)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace detail

// True when the existential template uses the "... in the image?" variant;
// the choice is the top bit of a 64-bit FNV-1a hash of the canonical form.
inline bool UsesImageSuffix(const Premise &premise) {
  return (detail::Fnv1a64(premise.Canonical()) >> 63) == 0;
}

// Templated QA pairs for one premise.
//   <x>          Is there a/an x[ in the image]?        yes
//   <x, color>   What is the color of the x?            color
//   <x, verb>    What is the x doing?                   verb
//   <x, a>       Is the x a?                            yes
//   <s, r, o>    What is the s r?                       o
//                Who/What is r the o?                   s
//   <s, has, o>  What does the s have? / Who has the o? o / s
inline std::vector<QAPair> GenerateQa(const Premise &premise,
                                      const LanguageResources &res = LanguageResources::Bundled()) {
  const auto &parts = premise.parts();
  if (parts.empty() || parts.size() > 3) throw InvalidArgument("bad premise arity");
  std::vector<QAPair> out;
  switch (premise.order()) {
    case Order::First: {
      const std::string suffix = UsesImageSuffix(premise) ? " in the image?" : "?";
      out.push_back(detail::MakePair("Is there " + detail::WithArticle(parts[0]) + suffix, "yes", premise));
      break;
    }
    case Order::Second: {
      const std::string &x = parts[0];
      const std::string &a = parts[1];
      if (res.colors.Contains(a)) {
        out.push_back(detail::MakePair("What is the color of the " + x + "?", a, premise));
      } else if (detail::TagWord(a, res.lexicon).tag == Tag::Verb) {
        out.push_back(detail::MakePair("What is the " + x + " doing?", a, premise));
      } else {
        out.push_back(detail::MakePair("Is the " + x + " " + a + "?", "yes", premise));
      }
      break;
    }
    case Order::Third: {
      const std::string &s = parts[0];
      const std::string &r = parts[1];
      const std::string &o = parts[2];
      const std::string wh = res.animate.Contains(s) ? "Who" : "What";
      if (r == "has") {
        out.push_back(detail::MakePair("What does the " + s + " have?", o, premise));
        out.push_back(detail::MakePair(wh + " has the " + o + "?", s, premise));
      } else {
        out.push_back(detail::MakePair("What is the " + s + " " + r + "?", o, premise));
        out.push_back(detail::MakePair(wh + " is " + r + " the " + o + "?", s, premise));
      }
      break;
    }
  }
  return out;
}

// Tuples SPICE sees in a question: the stoplist-filtered scene graph,
// including answer-dependent predicates.
inline std::vector<Premise> SpiceTuples(std::string_view text,
                                        const LanguageResources &res = LanguageResources::Bundled()) {
  const auto tokens = TokenizeAndTag(text, res.lexicon);
  return FilterPremises(GraphPremises(ParseSceneGraph(tokens, res), true), res.stoplist);
}

inline constexpr double kDefaultDedupThreshold = 0.9;

// Generates QA pairs from a source question's non-strict premises, then
// drops (a) pairs whose text equals the source text, ignoring case and
// whitespace, and (b) existential rewrites of an existential source whose
// tuple F1 against the source reaches `threshold`.
inline std::vector<QAPair> GenerateForQuestion(const Question &question, double threshold = kDefaultDedupThreshold,
                                               const LanguageResources &res = LanguageResources::Bundled()) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw InvalidArgument("threshold must lie in [0, 1]");
  const auto tokens = TokenizeAndTag(question.text, res.lexicon);
  const bool source_existential = ClassifyQuestion(tokens) == QuestionClass::Existential;
  const auto graph = ParseSceneGraph(tokens, res);
  const auto premises = FilterPremises(GraphPremises(graph, false), res.stoplist);
  const auto source_tuples = FilterPremises(GraphPremises(graph, true), res.stoplist);
  const std::string source_norm = detail::NormalizeQuestionText(question.text);

  std::vector<QAPair> out;
  std::unordered_set<std::string> emitted;
  for (const auto &premise : premises) {
    for (auto qa : GenerateQa(premise, res)) {
      const std::string norm = detail::NormalizeQuestionText(qa.question);
      if (norm == source_norm) continue;
      if (premise.order() == Order::First && source_existential &&
          SpiceF1(SpiceTuples(qa.question, res), source_tuples) >= threshold) {
        continue;
      }
      if (!emitted.insert(norm).second) continue;
      qa.source_question_id = question.question_id;
      qa.image_id = question.image_id;
      out.push_back(std::move(qa));
    }
  }
  return out;
}

}  // namespace pforge

#endif  // PREMISE_FORGE_QGEN_HPP
