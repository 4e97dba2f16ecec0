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

#include <string>
#include <vector>

#include "premise_forge/io.hpp"
#include "support/test_support.hpp"

namespace pforge {
namespace {

TEST(Questions, RoundTrip) {
  const std::vector<Question> qs = {{1, 10, "Is the dog red?", std::string("yes"), std::string("train")},
                                    {2, 11, "Where is the \"cat\"?", std::nullopt, std::nullopt}};
  std::string text;
  for (const auto &q : qs) text += QuestionToJson(q).dump() + "\n";
  EXPECT_EQ(ParseQuestions(text), qs);
}

TEST(Questions, ErrorsCarryLineNumbers) {
  const std::string text =
      "{\"question_id\": 1, \"image_id\": 2, \"text\": \"Is it?\"}\n"
      "\n"
      "{\"question_id\": 2, \"image_id\": 2}\n";
  try {
    ParseQuestions(text, "qs.jsonl");
    FAIL();
  } catch (const DataError &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("text"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("qs.jsonl:3"), std::string::npos);
  }
  EXPECT_THROW(ParseQuestions("{\"question_id\": 1, \"image_id\": 2, \"text\": \"  \"}\n"), DataError);
  EXPECT_THROW(ParseQuestions("{\"question_id\": -1, \"image_id\": 2, \"text\": \"a?\"}\n"), DataError);
  EXPECT_THROW(ParseQuestions("{\"question_id\": \"1\", \"image_id\": 2, \"text\": \"a?\"}\n"), DataError);
  EXPECT_THROW(ParseQuestions("[1, 2]\n"), DataError);
  EXPECT_THROW(ParseQuestions("{oops\n"), DataError);
  EXPECT_THROW(ReadQuestions("/nonexistent/q.jsonl"), DataError);
}

TEST(QAPairs, RoundTripAndKeys) {
  QAPair qa;
  qa.question = "What is the color of the car?";
  qa.answer = "red";
  qa.answer_type = AnswerType::Other;
  qa.source_premise = Premise("car", "red");
  qa.source_question_id = 3;
  qa.image_id = 30;
  const Json j = QAPairToJson(qa);
  EXPECT_EQ(j.dump(),
            "{\"question\":\"What is the color of the car?\",\"answer\":\"red\",\"answer_type\":\"other\","
            "\"premise\":\"<car, red>\",\"source_question_id\":3,\"image_id\":30}");
  EXPECT_EQ(ParseQAPairs(j.dump() + "\n"), std::vector<QAPair>{qa});
  auto bad = j;
  bad["answer_type"] = "maybe";
  EXPECT_THROW(ParseQAPairs(bad.dump()), DataError);
  bad = j;
  bad["premise"] = "car, red";
  EXPECT_THROW(ParseQAPairs(bad.dump()), DataError);
}

TEST(Tuples, RoundTrip) {
  const std::vector<QrpeTuple> ts = {{1, 2, Premise("dog"), 3, 0.5, std::nullopt},
                                     {1, 2, Premise("dog", "red"), 7, 1.0 / 3.0, std::string("val")}};
  EXPECT_EQ(ParseTuples(TuplesToJsonl(ts)), ts);
  EXPECT_THROW(ParseTuples("{\"pos_image\":1,\"question_id\":2,\"premise\":\"<a>\",\"neg_image\":3}\n"), DataError);
}

TEST(Records, RoundTripAndValidation) {
  const std::vector<RelevanceRecord> rs = {{1, 2, 1, 1, Premise("dog"), std::nullopt},
                                           {1, 3, 0, 2, Premise("dog", "red"), std::string("a dog")},
                                           {4, 5, 0, std::nullopt, std::nullopt, std::nullopt}};
  EXPECT_EQ(ParseRecords(RecordsToJsonl(rs)), rs);
  EXPECT_THROW(ParseRecords("{\"question_id\":1,\"image_id\":2,\"label\":2}\n"), DataError);
  EXPECT_THROW(ParseRecords("{\"question_id\":1,\"image_id\":2,\"label\":1,\"falsified_order\":3}\n"), DataError);
}

TEST(TrainingSet, ProvenanceRoundTrip) {
  const std::vector<TrainingEntry> es = {
      {Question{1, 2, "Is it?", std::string("yes"), std::string("train")}, std::nullopt},
      {Question{3, 2, "Is there a dog?", std::string("yes"), std::nullopt}, Provenance{1, Premise("dog")}}};
  std::string text;
  for (const auto &e : es) text += TrainingEntryToJson(e).dump() + "\n";
  EXPECT_EQ(ParseTrainingSet(text), es);
}

TEST(Spec, SidecarRoundTrip) {
  EncodingSpec s;
  s.question_vocab = {"a", "b"};
  s.premise_vocab_1 = {"dog"};
  s.premise_vocab_2 = {{"dog", "red"}};
  s.image_dim = 4;
  s.caption_mode = TextMode::BagOfWords;
  s.caption_vocab = {"x"};
  const auto [kind, back] = SpecFromJson(SpecToJson(ModelKind::CapQPC, s), "spec");
  EXPECT_EQ(kind, ModelKind::CapQPC);
  EXPECT_EQ(back.question_vocab, s.question_vocab);
  EXPECT_EQ(back.premise_vocab_2, s.premise_vocab_2);
  EXPECT_EQ(back.image_dim, 4u);
  EXPECT_EQ(back.caption_mode, s.caption_mode);
  EXPECT_THROW(SpecFromJson(Json::parse("{\"kind\":\"rel-q\"}"), "spec"), DataError);
  EXPECT_THROW(SpecFromJson(Json::parse("{\"kind\":\"nope\"}"), "spec"), DataError);
}

TEST(Config, ParseAndValidate) {
  const auto c = Config::FromText("# settings\nthreshold = 0.8\n\nseed=3\nseed = 4\n");
  EXPECT_EQ(c.Get("threshold"), std::optional<std::string>("0.8"));
  EXPECT_EQ(c.Get("seed"), std::optional<std::string>("4"));
  EXPECT_FALSE(c.Get("missing").has_value());
  try {
    Config::FromText("a = 1\nbroken\n", "cfg");
    FAIL();
  } catch (const DataError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  auto bad = Config::FromText("objects = /nonexistent/objects.jsonl\n");
  EXPECT_THROW(bad.Validate(), DataError);
  auto good = Config::FromText("objects = " + pftest::FixturePath("dogs/objects.jsonl") + "\n");
  EXPECT_NO_THROW(good.Validate());
}

}  // namespace
}  // namespace pforge
