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

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "premise_forge/io.hpp"
#include "premise_forge/qrpe.hpp"
#include "support/test_support.hpp"

namespace pforge {
namespace {

// Four images: 1 red car (positive), 2 blue car, 3 no car, 4 car with no
// attribute annotations.
AnnotationStore ThreeCars() {
  AnnotationStore::Options opts;
  opts.exclusion = ExclusionLexicon::FromText("SISTER red blue\n");
  AnnotationStore s(std::move(opts));
  s.AddObjects(1, {"car"});
  s.AddObjects(2, {"car"});
  s.AddObjects(3, {"dog"});
  s.AddObjects(4, {"car"});
  s.AddAttribute(1, "car", "red");
  s.AddAttribute(2, "car", "blue");
  return s;
}

const std::vector<Premise> kRedCar = {Premise("car"), Premise("car", "red")};

TEST(Candidates, SecondOrderTargetNeedsObjectPresent) {
  EXPECT_EQ(FindCandidates(ThreeCars(), kRedCar, Premise("car", "red"), 1), std::set<ImageId>{2});
}

TEST(Candidates, FirstOrderTargetExemptsItsAttributes) {
  EXPECT_EQ(FindCandidates(ThreeCars(), kRedCar, Premise("car"), 1), std::set<ImageId>{3});
}

TEST(Candidates, PositiveNeverACandidate) {
  EXPECT_TRUE(FindCandidates(ThreeCars(), kRedCar, Premise("car", "red"), 2).count(2) == 0);
}

TEST(Candidates, ThirdOrderPremisesUnchecked) {
  std::vector<Premise> ps = kRedCar;
  ps.push_back(Premise("car", "on", "road"));
  EXPECT_EQ(FindCandidates(ThreeCars(), ps, Premise("car", "red"), 1), std::set<ImageId>{2});
  EXPECT_THROW(FalsifiesOnly(ThreeCars(), ps, Premise("car", "on", "road"), 2), InvalidArgument);
  EXPECT_EQ(CheckablePremises(ps), kRedCar);
}

TEST(Candidates, OtherPremiseMustBeTrue) {
  // Target <car, red> with an extra <dog>: no image has a dog and a blue car.
  std::vector<Premise> ps = {Premise("car"), Premise("dog"), Premise("car", "red")};
  EXPECT_TRUE(FindCandidates(ThreeCars(), ps, Premise("car", "red"), 1).empty());
}

TEST(SelectNegative, NearestWithSmallestIdOnTies) {
  FeatureStore f(2);
  f.Add(1, {0, 0});
  f.Add(5, {1, 0});
  f.Add(9, {0, 1});
  f.Add(7, {3, 4});
  auto [id, d] = SelectNegative({9, 5, 7}, 1, f);
  EXPECT_EQ(id, 5);
  EXPECT_DOUBLE_EQ(d, 1.0);
  auto [id2, d2] = SelectNegative({7}, 1, f);
  EXPECT_EQ(id2, 7);
  EXPECT_DOUBLE_EQ(d2, 5.0);
  EXPECT_THROW(SelectNegative({}, 1, f), NoNegativeFound);
  EXPECT_THROW(SelectNegative({42}, 1, f), DataError);
}

TEST(Build, HandCase) {
  FeatureStore f(1);
  for (ImageId i = 1; i <= 4; ++i) f.Add(i, {static_cast<float>(i)});
  const std::vector<Question> qs = {{3, 1, "Is the car red?", std::nullopt, std::string("train")}};
  const auto tuples = BuildDataset(qs, ThreeCars(), f);
  ASSERT_EQ(tuples.size(), 2u);
  EXPECT_EQ(tuples[0], (QrpeTuple{1, 3, Premise("car"), 3, 2.0, "train"}));
  EXPECT_EQ(tuples[1], (QrpeTuple{1, 3, Premise("car", "red"), 2, 1.0, "train"}));
}

TEST(Build, SkipsQuestionsFalseOnPositive) {
  FeatureStore f(1);
  for (ImageId i = 1; i <= 4; ++i) f.Add(i, {static_cast<float>(i)});
  const std::vector<Question> qs = {{3, 2, "Is the car red?", std::nullopt, std::nullopt}};
  EXPECT_TRUE(BuildDataset(qs, ThreeCars(), f).empty());
}

// ---- fixture corpora against the brute-force enumerator ----

void ExpectSameTuples(const std::vector<QrpeTuple> &got, const std::vector<QrpeTuple> &want, const std::string &tag) {
  ASSERT_EQ(got.size(), want.size()) << tag;
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].pos_image, want[i].pos_image) << tag << " #" << i;
    EXPECT_EQ(got[i].question_id, want[i].question_id) << tag << " #" << i;
    EXPECT_EQ(got[i].premise, want[i].premise) << tag << " #" << i;
    EXPECT_EQ(got[i].neg_image, want[i].neg_image) << tag << " #" << i;
    EXPECT_NEAR(got[i].distance, want[i].distance, 1e-9) << tag << " #" << i;
    EXPECT_EQ(got[i].split, want[i].split) << tag << " #" << i;
  }
}

TEST(Oracle, MatchesExpectedFilesAndEnumerator) {
  for (const auto &name : pftest::kCorpora) {
    const auto c = pftest::LoadCorpus(name);
    const auto got = BuildDataset(c.questions, c.store, c.features);
    EXPECT_FALSE(got.empty()) << name;
    ExpectSameTuples(got, ReadTuples(c.dir() + "/expected_tuples.jsonl"), name + " expected");
    ExpectSameTuples(got, pftest::BruteForceBuild(pftest::LoadRaw(name)), name + " enumerator");
  }
}

TEST(Oracle, ThreadCountDoesNotChangeOutput) {
  for (const auto &name : pftest::kCorpora) {
    const auto c = pftest::LoadCorpus(name);
    const auto one = BuildDataset(c.questions, c.store, c.features);
    for (unsigned t : {2u, 3u, 8u}) EXPECT_EQ(BuildDataset(c.questions, c.store, c.features, {t}), one) << name;
  }
}

TEST(Oracle, EveryTupleFalsifiesExactlyItsPremise) {
  for (const auto &name : pftest::kCorpora) {
    const auto c = pftest::LoadCorpus(name);
    const auto raw = pftest::LoadRaw(name);
    std::map<QuestionId, Question> by_id;
    for (const auto &q : c.questions) by_id[q.question_id] = q;
    std::set<std::pair<QuestionId, Premise>> seen;
    for (const auto &t : BuildDataset(c.questions, c.store, c.features)) {
      EXPECT_TRUE(seen.emplace(t.question_id, t.premise).second) << name << " duplicate";
      EXPECT_NE(t.pos_image, t.neg_image);
      EXPECT_EQ(pftest::RawTruth(raw, t.premise, t.neg_image), pftest::Truth::F);
      const auto checked = CheckablePremises(ExtractPremises(by_id.at(t.question_id), ExtractionMode::Strict));
      for (const auto &p : checked) {
        EXPECT_NE(pftest::RawTruth(raw, p, t.pos_image), pftest::Truth::F);
        if (p == t.premise) continue;
        auto need = pftest::Required(p, t.premise);
        if (need) {
          EXPECT_EQ(pftest::RawTruth(raw, p, t.neg_image), *need) << name << " " << p;
        }
      }
      // No falsifying image is strictly closer.
      for (const auto &[img, _] : raw.objects) {
        if (img == t.pos_image || !pftest::RawFalsifiesOnly(raw, checked, t.premise, img)) continue;
        EXPECT_GE(pftest::RawDistance(raw, t.pos_image, img), t.distance - 1e-12);
      }
    }
  }
}

TEST(Records, BalancedAndOrderTagged) {
  const auto c = pftest::LoadCorpus("street");
  const auto tuples = BuildDataset(c.questions, c.store, c.features);
  const auto recs = BalancedRecords(tuples);
  ASSERT_EQ(recs.size(), 2 * tuples.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    pos += recs[i].label;
    const auto &t = tuples[i / 2];
    EXPECT_EQ(recs[i].image_id, i % 2 == 0 ? t.pos_image : t.neg_image);
    EXPECT_EQ(recs[i].falsified_order, to_int(t.premise.order()));
    EXPECT_EQ(recs[i].premise, t.premise);
  }
  EXPECT_EQ(pos, tuples.size());
}

TEST(Stats, EmptyAndFixture) {
  EXPECT_EQ(ComputeDatasetStats({}), DatasetStats{});
  const auto c = pftest::LoadCorpus("kitchen");
  const auto tuples = BuildDataset(c.questions, c.store, c.features);
  const auto s = ComputeDatasetStats(tuples);
  EXPECT_EQ(s.total, tuples.size());
  EXPECT_EQ(s.first_order + s.second_order, s.total);
  std::set<std::string> premises;
  std::set<QuestionId> questions;
  std::size_t with_split = 0;
  for (const auto &t : tuples) {
    premises.insert(t.premise.Canonical());
    questions.insert(t.question_id);
    with_split += t.split.has_value();
  }
  EXPECT_EQ(s.unique_premises, premises.size());
  EXPECT_EQ(s.unique_questions, questions.size());
  std::size_t split_total = 0;
  for (const auto &[k, v] : s.by_split) split_total += v;
  EXPECT_EQ(split_total, with_split);
  EXPECT_EQ(s.by_split.size(), 2u);
}

TEST(Histogram, KnownDistances) {
  FeatureStore f(2);
  f.Add(1, {1, 0});
  f.Add(2, {0, 1});
  f.Add(3, {1, 0});
  const auto h = PairDistanceHistogram({{1, 3}, {1, 2}}, f, 0.5);
  EXPECT_EQ(h.n, 2u);
  EXPECT_DOUBLE_EQ(h.mean, std::sqrt(2.0) / 2.0);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_NE(h.ToText().find("mean\t"), std::string::npos);
  EXPECT_THROW(PairDistanceHistogram({}, f, 0.0), InvalidArgument);
  EXPECT_THROW(PairDistanceHistogram({}, f, -1.0), InvalidArgument);
  EXPECT_EQ(PairDistanceHistogram({}, f, 1.0).mean, 0.0);
}

TEST(Histogram, RandomPairsAreDeterministicAndDistinct) {
  const std::vector<ImageId> pool = {1, 2, 3, 4, 5};
  const auto a = RandomPairs({1, 2, 3, 1}, pool, 7);
  EXPECT_EQ(a, RandomPairs({1, 2, 3, 1}, pool, 7));
  for (const auto &[p, q] : a) EXPECT_NE(p, q);
  EXPECT_THROW(RandomPairs({1}, {1}, 7), InvalidArgument);
}

TEST(Nearest, HandEmbeddings) {
  const auto emb = EmbeddingTable::FromText(
      "dog 1 0 0 0\n"
      "cat 0.9 0.1 0 0\n"
      "car 0 0 1 0\n"
      "red 0 0 0 1\n");
  const std::vector<Question> corpus = {{4, 1, "Is the car red?", std::nullopt, std::nullopt},
                                        {2, 1, "Is the cat sleeping?", std::nullopt, std::nullopt},
                                        {3, 1, "Where is the cat?", std::nullopt, std::nullopt}};
  const Question q{9, 1, "Is the dog sleeping?", std::nullopt, std::nullopt};
  // Both cat questions embed to the same vector; the smaller id wins.
  EXPECT_EQ(NearestQuestion(q, corpus, emb), 2);
  EXPECT_EQ(NearestQuestion(Question{9, 1, "What is red?", std::nullopt, std::nullopt}, corpus, emb), 4);
  EXPECT_THROW(NearestQuestion(q, {}, emb), InvalidArgument);
  EXPECT_DOUBLE_EQ(CosineSimilarity({1, 0}, {0, 0}), 0.0);
  EXPECT_EQ(QuestionWords("What is the cat's tie?"), (std::vector<std::string>{"what", "is", "the", "cat", "tie"}));
}

}  // namespace
}  // namespace pforge
