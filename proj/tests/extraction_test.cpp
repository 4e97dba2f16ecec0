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

#include <algorithm>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "premise_forge/extraction.hpp"
#include "premise_forge/scene_graph.hpp"
#include "support/test_support.hpp"

namespace pforge {
namespace {

std::vector<Premise> Strict(const std::string &q) { return ExtractPremises(q, ExtractionMode::Strict); }
std::vector<Premise> Loose(const std::string &q) { return ExtractPremises(q, ExtractionMode::NonStrict); }

bool Contains(const std::vector<Premise> &v, const Premise &p) { return std::find(v.begin(), v.end(), p) != v.end(); }

SceneGraph Parse(const std::string &q) {
  return ParseSceneGraph(TokenizeAndTag(q, TagLexicon::Bundled()));
}

TEST(Classify, Examples) {
  EXPECT_EQ(ClassifyQuestion("How many giraffes are in the image?"), QuestionClass::Counting);
  EXPECT_EQ(ClassifyQuestion("How much water is in the glass?"), QuestionClass::Counting);
  EXPECT_EQ(ClassifyQuestion("Is the little girl moving?"), QuestionClass::Existential);
  EXPECT_EQ(ClassifyQuestion("Is there a man?"), QuestionClass::Existential);
  EXPECT_EQ(ClassifyQuestion("Are there clouds in the sky?"), QuestionClass::Existential);
  EXPECT_EQ(ClassifyQuestion("Can you see the ocean?"), QuestionClass::Existential);
  EXPECT_EQ(ClassifyQuestion("What brand of racket is the man holding?"), QuestionClass::Other);
  EXPECT_EQ(ClassifyQuestion("Is the big red dog old?"), QuestionClass::Other);
}

TEST(SceneGraph, AttributesOnRepeatedHead) {
  const auto g = Parse("What kind of building is the large white building?");
  ASSERT_EQ(g.ObjectLemmas(), std::vector<std::string>{"building"});
  ASSERT_EQ(g.attributes.size(), 2u);
  EXPECT_EQ(g.attributes[0].lemma, "large");
  EXPECT_EQ(g.attributes[1].lemma, "white");
  EXPECT_TRUE(g.relations.empty());
}

TEST(SceneGraph, VerbRelation) {
  const auto g = Parse("What brand of racket is the man holding?");
  EXPECT_EQ(g.ObjectLemmas(), (std::vector<std::string>{"man", "racket"}));
  ASSERT_EQ(g.relations.size(), 1u);
  EXPECT_EQ(g.objects[g.relations[0].subject].lemma, "man");
  EXPECT_EQ(g.relations[0].lemma, "holding");
  EXPECT_EQ(g.objects[g.relations[0].object].lemma, "racket");
}

TEST(SceneGraph, PossessiveHasRelation) {
  const auto g = Parse("What color is the cat's tie?");
  EXPECT_EQ(g.ObjectLemmas(), (std::vector<std::string>{"cat", "tie"}));
  ASSERT_EQ(g.relations.size(), 1u);
  EXPECT_EQ(g.relations[0].lemma, "has");
  EXPECT_TRUE(g.relations[0].possessive);
}

TEST(SceneGraph, IndicesInRange) {
  for (const auto &q : pftest::VqaStyleQuestions()) {
    const auto g = Parse(q.text);
    for (const auto &a : g.attributes) EXPECT_LT(a.object, g.objects.size()) << q.text;
    for (const auto &r : g.relations) {
      EXPECT_LT(r.subject, g.objects.size()) << q.text;
      EXPECT_LT(r.object, g.objects.size()) << q.text;
    }
  }
}

TEST(Extract, FixtureExamples) {
  EXPECT_EQ(Strict("What brand of racket is the man holding?"),
            (std::vector<Premise>{Premise("man"), Premise("racket"), Premise("man", "holding", "racket")}));
  EXPECT_TRUE(Strict("How many giraffes are in the image?").empty());
  EXPECT_EQ(Strict("What color is the cat's tie?"),
            (std::vector<Premise>{Premise("cat"), Premise("tie"), Premise("cat", "has", "tie")}));
  const auto building = Strict("What kind of building is the large white building?");
  EXPECT_TRUE(Contains(building, Premise("building", "large")));
  EXPECT_TRUE(Contains(building, Premise("building", "white")));
  EXPECT_FALSE(Contains(building, Premise("kind")));
}

TEST(Extract, AbstractionNounsDroppedConcreteKept) {
  EXPECT_FALSE(Contains(Strict("What brand of racket is the man holding?"), Premise("brand")));
  EXPECT_FALSE(Contains(Strict("What color is the bus?"), Premise("color")));
  EXPECT_EQ(Strict("What is the color of the car?"), std::vector<Premise>{Premise("car")});
  EXPECT_EQ(Strict("What number is on the bus?"), std::vector<Premise>{Premise("bus")});
}

TEST(Extract, NonStrictKeepsExistentialButDropsAnswerPredicate) {
  EXPECT_TRUE(Strict("Is the little girl moving?").empty());
  const auto loose = Loose("Is the little girl moving?");
  EXPECT_EQ(loose, (std::vector<Premise>{Premise("girl"), Premise("girl", "little")}));
  EXPECT_EQ(Loose("How many giraffes are in the image?"), std::vector<Premise>{Premise("giraffe")});
}

TEST(Extract, BigRedDogOld) {
  EXPECT_EQ(Strict("Is the big red dog old?"),
            (std::vector<Premise>{Premise("dog"), Premise("dog", "big"), Premise("dog", "red"), Premise("dog", "old")}));
}

TEST(Extract, PrepositionRelations) {
  EXPECT_EQ(Strict("Why is the man looking at the lady?"),
            (std::vector<Premise>{Premise("man"), Premise("lady"), Premise("man", "looking at", "lady")}));
  EXPECT_TRUE(Contains(Strict("Is the man next to the red car?"), Premise("man", "next to", "car")));
  EXPECT_FALSE(Contains(Strict("Is the man next to the red car?"), Premise("man", "next")));
}

TEST(Filter, Examples) {
  const auto &stop = LanguageResources::Bundled().stoplist;
  EXPECT_EQ(FilterPremises({Premise("image"), Premise("man")}, stop), std::vector<Premise>{Premise("man")});
  EXPECT_EQ(FilterPremises({Premise("man"), Premise("man")}, stop), std::vector<Premise>{Premise("man")});
  EXPECT_TRUE(FilterPremises({}, stop).empty());
  EXPECT_EQ(FilterPremises({Premise("photo", "old"), Premise("man", "in", "picture"), Premise("dog")}, stop),
            std::vector<Premise>{Premise("dog")});
}

// ---- properties over the VQA-style corpus ----

class CorpusProperties : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { questions_ = new std::vector<Question>(pftest::VqaStyleQuestions()); }
  static void TearDownTestSuite() { delete questions_; }
  static std::vector<Question> *questions_;
};
std::vector<Question> *CorpusProperties::questions_ = nullptr;

TEST_F(CorpusProperties, OrderSoundness) {
  for (const auto &q : *questions_) {
    for (auto mode : {ExtractionMode::Strict, ExtractionMode::NonStrict}) {
      const auto ps = ExtractPremises(q, mode);
      std::set<std::string> firsts;
      for (const auto &p : ps) {
        if (p.order() == Order::First) firsts.insert(p.part(0));
      }
      for (const auto &p : ps) {
        if (p.order() == Order::Second) {
          EXPECT_TRUE(firsts.count(p.part(0))) << q.text << " " << p;
        }
        if (p.order() == Order::Third) {
          EXPECT_TRUE(firsts.count(p.part(0))) << q.text << " " << p;
          EXPECT_TRUE(firsts.count(p.part(2))) << q.text << " " << p;
        }
      }
      // first order, then second, then third
      EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), [](const Premise &a, const Premise &b) {
        return to_int(a.order()) < to_int(b.order());
      })) << q.text;
    }
  }
}

TEST_F(CorpusProperties, StrictFilterEmptiesExistentialAndCounting) {
  std::size_t filtered = 0;
  for (const auto &q : *questions_) {
    if (ClassifyQuestion(q.text) != QuestionClass::Other) {
      ++filtered;
      EXPECT_TRUE(ExtractPremises(q, ExtractionMode::Strict).empty()) << q.text;
    }
  }
  EXPECT_GT(filtered, 10u);
}

TEST_F(CorpusProperties, StoplistClosureAndNoDuplicates) {
  const auto &stop = LanguageResources::Bundled().stoplist;
  for (const auto &q : *questions_) {
    const auto ps = ExtractPremises(q, ExtractionMode::NonStrict);
    std::set<Premise> seen;
    for (const auto &p : ps) {
      EXPECT_TRUE(seen.insert(p).second) << q.text << " duplicate " << p;
      for (const auto &part : p.parts()) EXPECT_FALSE(stop.Contains(part)) << q.text << " " << p;
    }
  }
}

TEST_F(CorpusProperties, CanonicalRoundTrip) {
  for (const auto &q : *questions_) {
    for (const auto &p : ExtractPremises(q, ExtractionMode::NonStrict)) {
      auto back = Premise::Parse(p.Canonical());
      ASSERT_TRUE(back.has_value()) << p;
      EXPECT_EQ(*back, p);
    }
  }
}

TEST_F(CorpusProperties, DeterministicAcrossThreads) {
  std::vector<std::string> reference;
  for (const auto &q : *questions_) reference.push_back(JoinCanonical(ExtractPremises(q, ExtractionMode::Strict)));
  std::vector<std::vector<std::string>> results(4, std::vector<std::string>(questions_->size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < results.size(); ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = 0; i < questions_->size(); ++i) {
        const std::size_t k = (i + t * 37) % questions_->size();
        results[t][k] = JoinCanonical(ExtractPremises((*questions_)[k], ExtractionMode::Strict));
      }
    });
  }
  for (auto &th : pool) th.join();
  for (const auto &r : results) EXPECT_EQ(r, reference);
}

}  // namespace
}  // namespace pforge
