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

#include "premise_forge/explanation.hpp"
#include "support/test_support.hpp"

namespace pforge {
namespace {

TEST(ExplainPremise, Sentences) {
  EXPECT_EQ(ExplainPremise(Premise("giraffe")).sentence, "There is no giraffe in the image.");
  EXPECT_EQ(ExplainPremise(Premise("car", "red")).sentence, "The car is not red.");
  EXPECT_EQ(ExplainPremise(Premise("car", "red")).premise, Premise("car", "red"));
  try {
    ExplainPremise(Premise("man", "holding", "racket"));
    FAIL();
  } catch (const InvalidArgument &e) {
    EXPECT_NE(std::string(e.what()).find("unsupported premise order"), std::string::npos);
  }
}

TEST(ExplainQuestion, PredicateDriven) {
  const std::set<Premise> grounded = {Premise("dog"), Premise("dog", "big"), Premise("dog", "old")};
  const auto v = ExplainQuestion("Is the big red dog old?", [&](const Premise &p) { return grounded.count(p) > 0; });
  EXPECT_FALSE(v.relevant());
  ASSERT_EQ(v.explanations.size(), 1u);
  EXPECT_EQ(v.explanations[0].sentence, "The dog is not red.");
}

TEST(ExplainQuestion, AllGroundedIsRelevant) {
  EXPECT_TRUE(ExplainQuestion("What is the man holding?", [](const Premise &) { return true; }).relevant());
}

TEST(ExplainQuestion, ThirdOrderNeverExplained) {
  const auto v = ExplainQuestion("What brand of racket is the man holding?", [](const Premise &) { return false; });
  ASSERT_EQ(v.explanations.size(), 2u);
  EXPECT_EQ(v.explanations[0].sentence, "There is no man in the image.");
  EXPECT_EQ(v.explanations[1].sentence, "There is no racket in the image.");
}

TEST(ExplainQuestion, ExistentialQuestionsStillExplained) {
  const auto v = ExplainQuestion("Is there a giraffe?", [](const Premise &) { return false; });
  ASSERT_EQ(v.explanations.size(), 1u);
  EXPECT_EQ(v.explanations[0].premise, Premise("giraffe"));
}

TEST(ExplainQuestion, GroundTruthStore) {
  const auto c = pftest::LoadCorpus("dogs");
  // Image 1: big red old dog; image 3: small red old dog.
  EXPECT_TRUE(ExplainQuestion("Is the big red dog old?", c.store, 1).relevant());
  const auto v = ExplainQuestion("Is the big red dog old?", c.store, 3);
  ASSERT_EQ(v.explanations.size(), 1u);
  EXPECT_EQ(v.explanations[0].sentence, "The dog is not big.");
}

TEST(ExplainQuestion, FpdModel) {
  EncodingSpec spec;
  spec.premise_vocab_1 = {"dog", "cat"};
  spec.image_dim = 1;
  // Logit = 1 - 2 * [cat]: cat premises are predicted ungrounded.
  MlpModel m({3, 1});
  m.layers()[0].w = {0.0, -2.0, 0.0};
  m.layers()[0].b = {1.0};
  const std::vector<float> img = {0.0f};
  const auto v = ExplainQuestion("Is the dog chasing the cat?", m, spec, img);
  ASSERT_EQ(v.explanations.size(), 1u);
  EXPECT_EQ(v.explanations[0].sentence, "There is no cat in the image.");
}

}  // namespace
}  // namespace pforge
