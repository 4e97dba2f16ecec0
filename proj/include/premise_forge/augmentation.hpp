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

#ifndef PREMISE_FORGE_AUGMENTATION_HPP
#define PREMISE_FORGE_AUGMENTATION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "premise_forge/qgen.hpp"
#include "premise_forge/question.hpp"

namespace pforge {

enum class Strategy { Baseline, All, OnlyBinary, NoOther, NoBinary, CommOther, Top1kA };

inline constexpr Strategy kAllStrategies[] = {Strategy::Baseline, Strategy::All,       Strategy::OnlyBinary,
                                              Strategy::NoOther,  Strategy::NoBinary,  Strategy::CommOther,
                                              Strategy::Top1kA};

inline std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::Baseline: return "baseline";
    case Strategy::All: return "all";
    case Strategy::OnlyBinary: return "only-binary";
    case Strategy::NoOther: return "no-other";
    case Strategy::NoBinary: return "no-binary";
    case Strategy::CommOther: return "comm-other";
    case Strategy::Top1kA: return "top1k-a";
  }
  return "all";
}

inline std::optional<Strategy> ParseStrategy(std::string_view s) {
  for (Strategy st : kAllStrategies) {
    if (StrategyName(st) == s) return st;
  }
  return std::nullopt;
}

inline bool IsBinary(AnswerType t) { return t == AnswerType::Yes || t == AnswerType::No; }

inline constexpr std::size_t kTopAnswers = 1000;

// The `k` most frequent answers (normalized); frequency ties are broken
// lexicographically, so the cut at rank k is deterministic.
inline std::unordered_set<std::string> TopAnswers(const std::vector<std::string> &answers, std::size_t k = kTopAnswers) {
  std::map<std::string, std::size_t> freq;
  for (const auto &a : answers) ++freq[ToLower(Trim(a))];
  std::vector<std::pair<std::string, std::size_t>> ranked(freq.begin(), freq.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) { return a.second > b.second; });
  std::unordered_set<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) out.insert(ranked[i].first);
  return out;
}

// Filters generated pairs by strategy. `source_answers` are the answers of
// the source training questions; only CommOther and Top1kA read them.
inline std::vector<QAPair> ApplyStrategy(const std::vector<QAPair> &generated,
                                         const std::vector<std::string> &source_answers, Strategy strategy,
                                         std::size_t top_k = kTopAnswers) {
  std::unordered_set<std::string> pool;
  if (strategy == Strategy::CommOther) {
    for (const auto &a : source_answers) pool.insert(ToLower(Trim(a)));
  } else if (strategy == Strategy::Top1kA) {
    pool = TopAnswers(source_answers, top_k);
  }
  std::vector<QAPair> out;
  for (const auto &qa : generated) {
    const AnswerType t = qa.answer_type;
    bool keep = false;
    switch (strategy) {
      case Strategy::Baseline: keep = false; break;
      case Strategy::All: keep = true; break;
      case Strategy::OnlyBinary: keep = IsBinary(t); break;
      case Strategy::NoOther: keep = t != AnswerType::Other; break;
      case Strategy::NoBinary: keep = !IsBinary(t); break;
      case Strategy::CommOther:
        keep = IsBinary(t) || pool.count(ToLower(Trim(qa.answer))) > 0;
        break;
      case Strategy::Top1kA:
        keep = IsBinary(t) || (t == AnswerType::Other && pool.count(ToLower(Trim(qa.answer))) > 0);
        break;
    }
    if (keep) out.push_back(qa);
  }
  return out;
}

struct AnswerTypeCounts {
  std::size_t other = 0, number = 0, yes = 0, no = 0, total = 0;
  friend bool operator==(const AnswerTypeCounts &, const AnswerTypeCounts &) = default;
};

inline AnswerTypeCounts AnswerTypeDistribution(const std::vector<QAPair> &pairs) {
  AnswerTypeCounts c;
  for (const auto &qa : pairs) {
    switch (qa.answer_type) {
      case AnswerType::Other: ++c.other; break;
      case AnswerType::Number: ++c.number; break;
      case AnswerType::Yes: ++c.yes; break;
      case AnswerType::No: ++c.no; break;
    }
    ++c.total;
  }
  return c;
}

struct Provenance {
  QuestionId source_question_id = 0;
  Premise premise;
  friend bool operator==(const Provenance &, const Provenance &) = default;
};

struct TrainingEntry {
  Question question;
  std::optional<Provenance> provenance;  // set for generated entries
  friend bool operator==(const TrainingEntry &, const TrainingEntry &) = default;
};

// Source questions in order, then generated pairs in order with fresh ids
// counting up from the largest source id. Generated entries inherit the
// split of their source question.
inline std::vector<TrainingEntry> MergeTrainingSet(const std::vector<Question> &source,
                                                   const std::vector<QAPair> &augment) {
  std::unordered_map<QuestionId, const Question *> by_id;
  QuestionId next = 0;
  std::vector<TrainingEntry> out;
  out.reserve(source.size() + augment.size());
  for (const auto &q : source) {
    if (!by_id.emplace(q.question_id, &q).second) {
      throw InvalidArgument("duplicate question id " + std::to_string(q.question_id) + " in source set");
    }
    next = std::max(next, q.question_id + 1);
    out.push_back(TrainingEntry{q, std::nullopt});
  }
  for (const auto &qa : augment) {
    Question q;
    q.question_id = next++;
    q.image_id = qa.image_id;
    q.text = qa.question;
    q.answer = qa.answer;
    if (auto it = by_id.find(qa.source_question_id); it != by_id.end()) q.split = it->second->split;
    out.push_back(TrainingEntry{std::move(q), Provenance{qa.source_question_id, qa.source_premise}});
  }
  return out;
}

}  // namespace pforge

#endif  // PREMISE_FORGE_AUGMENTATION_HPP
