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


#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "premise_forge/augmentation.hpp"
#include "support/test_support.hpp"

namespace pforge {
namespace {

QAPair Qa(const std::string &q, const std::string &a, QuestionId src = 1) {
  QAPair p;
  p.question = q;
  p.answer = a;
  p.answer_type = ClassifyAnswer(a);
  p.source_premise = Premise("dog");
  p.source_question_id = src;
  p.image_id = 100 + src;
  return p;
}

std::vector<QAPair> Mixed() {
  return {Qa("Is there a dog?", "yes"), Qa("What is the color of the dog?", "brown"),
          Qa("What is the dog doing?", "sitting"), Qa("What is the number?", "3"),
          Qa("What is the color of the cat?", "mauve"), Qa("Is the dog big?", "no")};
}

std::set<std::string> Texts(const std::vector<QAPair> &v) {
  std::set<std::string> out;
  for (const auto &p : v) out.insert(p.question);
  return out;
}

bool Subset(const std::set<std::string> &a, const std::set<std::string> &b) {
  for (const auto &x : a) {
    if (!b.count(x)) return false;
  }
  return true;
}

const std::vector<std::string> kSourceAnswers = {"brown", "brown", "3", "yes", "sitting", "white"};

TEST(Strategy, Examples) {
  const auto g = Mixed();
  EXPECT_TRUE(ApplyStrategy(g, kSourceAnswers, Strategy::Baseline).empty());
  EXPECT_EQ(ApplyStrategy(g, kSourceAnswers, Strategy::All), g);
  EXPECT_EQ(Texts(ApplyStrategy(g, kSourceAnswers, Strategy::OnlyBinary)),
            (std::set<std::string>{"Is there a dog?", "Is the dog big?"}));
  EXPECT_EQ(Texts(ApplyStrategy(g, kSourceAnswers, Strategy::NoOther)),
            (std::set<std::string>{"Is there a dog?", "Is the dog big?", "What is the number?"}));
  EXPECT_EQ(Texts(ApplyStrategy(g, kSourceAnswers, Strategy::CommOther)),
            (std::set<std::string>{"Is there a dog?", "Is the dog big?", "What is the number?",
                                   "What is the color of the dog?", "What is the dog doing?"}));
  EXPECT_EQ(Texts(ApplyStrategy(g, kSourceAnswers, Strategy::Top1kA, 1)),
            (std::set<std::string>{"Is there a dog?", "Is the dog big?", "What is the color of the dog?"}));
}

TEST(Strategy, NamesRoundTrip) {
  for (Strategy s : kAllStrategies) EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  EXPECT_FALSE(ParseStrategy("most").has_value());
}

TEST(Strategy, InclusionLattice) {
  std::vector<QAPair> g;
  for (const auto &q : pftest::VqaStyleQuestions()) {
    for (auto &p : GenerateForQuestion(q)) g.push_back(p);
  }
  g.push_back(Qa("Is the dog big?", "no"));
  g.push_back(Qa("How many?", "4"));
  std::vector<std::string> answers = {"white", "red", "sitting", "4", "yes"};
  auto T = [&](Strategy s, std::size_t k = kTopAnswers) { return Texts(ApplyStrategy(g, answers, s, k)); };
  const auto all = T(Strategy::All);
  EXPECT_TRUE(T(Strategy::Baseline).empty());
  EXPECT_TRUE(Subset(T(Strategy::OnlyBinary), T(Strategy::NoOther)));
  EXPECT_TRUE(Subset(T(Strategy::NoOther), all));
  EXPECT_TRUE(Subset(T(Strategy::NoBinary), all));
  EXPECT_TRUE(Subset(T(Strategy::OnlyBinary), T(Strategy::CommOther)));
  EXPECT_TRUE(Subset(T(Strategy::Top1kA, 2), T(Strategy::Top1kA)));
  EXPECT_TRUE(Subset(T(Strategy::Top1kA), T(Strategy::CommOther)));
  EXPECT_TRUE(Subset(T(Strategy::CommOther), all));
  std::set<std::string> both = T(Strategy::OnlyBinary);
  for (const auto &x : T(Strategy::NoBinary)) EXPECT_TRUE(both.insert(x).second) << x;
  EXPECT_EQ(both, all);
}

TEST(TopAnswers, FrequencyThenLexicographic) {
  const std::vector<std::string> a = {"b", "a", "c", "c", "B ", "a"};
  EXPECT_EQ(TopAnswers(a, 1), (std::unordered_set<std::string>{"a"}));
  EXPECT_EQ(TopAnswers(a, 2), (std::unordered_set<std::string>{"a", "b"}));
  EXPECT_EQ(TopAnswers(a, 10).size(), 3u);
  EXPECT_TRUE(TopAnswers({}, 5).empty());
}

TEST(Distribution, CountsEveryType) {
  const auto d = AnswerTypeDistribution(Mixed());
  EXPECT_EQ(d, (AnswerTypeCounts{3, 1, 1, 1, 6}));
  EXPECT_EQ(AnswerTypeDistribution({}), AnswerTypeCounts{});
}

TEST(Merge, FreshIdsProvenanceAndSplit) {
  const std::vector<Question> src = {{4, 104, "Where is the dog?", std::string("park"), std::string("train")},
                                     {9, 109, "Is the cat red?", std::string("no"), std::nullopt}};
  const std::vector<QAPair> aug = {Qa("Is there a dog?", "yes", 4), Qa("Is there a cat?", "yes", 9)};
  const auto merged = MergeTrainingSet(src, aug);
  ASSERT_EQ(merged.size(), 4u);
  EXPECT_FALSE(merged[0].provenance.has_value());
  EXPECT_EQ(merged[0].question, src[0]);
  EXPECT_EQ(merged[2].question.question_id, 10);
  EXPECT_EQ(merged[3].question.question_id, 11);
  EXPECT_EQ(merged[2].question.image_id, 104);
  EXPECT_EQ(merged[2].question.split, std::optional<std::string>("train"));
  EXPECT_FALSE(merged[3].question.split.has_value());
  ASSERT_TRUE(merged[2].provenance.has_value());
  EXPECT_EQ(merged[2].provenance->source_question_id, 4);
  EXPECT_EQ(merged[2].provenance->premise, Premise("dog"));
}

TEST(Merge, DuplicateSourceIdIsAnError) {
  const std::vector<Question> src = {{4, 1, "a?", std::nullopt, std::nullopt}, {4, 2, "b?", std::nullopt, std::nullopt}};
  EXPECT_THROW(MergeTrainingSet(src, {}), InvalidArgument);
}

}  // namespace
}  // namespace pforge
