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
#include <sstream>
#include <string>

#include "premise_forge/features.hpp"
#include "support/test_support.hpp"

namespace pforge {
namespace {

FeatureStore Small() {
  FeatureStore s(3);
  s.Add(5, {1.0f, 2.0f, 3.0f});
  s.Add(2, {0.0f, 0.0f, 0.0f});
  s.Add(9, {-1.5f, 0.25f, 1e-7f});
  return s;
}

TEST(Features, BinaryRoundTrip) {
  const auto s = Small();
  std::stringstream ss;
  s.Write(ss);
  EXPECT_EQ(FeatureStore::Read(ss), s);
  const auto dir = pftest::TempDir("features");
  s.WriteFile((dir / "f.pfv").string());
  EXPECT_EQ(FeatureStore::ReadFile((dir / "f.pfv").string()), s);
  std::filesystem::remove_all(dir);
}

TEST(Features, HeaderLayout) {
  std::stringstream ss;
  Small().Write(ss);
  const std::string bytes = ss.str();
  // magic + dim + count + 3 * (id + 3 floats)
  EXPECT_EQ(bytes.size(), 4u + 4u + 4u + 3u * (8u + 12u));
  EXPECT_EQ(bytes.substr(0, 4), "PFV1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 3u);  // little-endian dim
}

TEST(Features, CorruptInputs) {
  std::stringstream ss;
  Small().Write(ss);
  const std::string good = ss.str();
  std::string bad_magic = good;
  bad_magic[0] = 'X';
  std::istringstream a(bad_magic);
  EXPECT_THROW(FeatureStore::Read(a), DataError);
  for (std::size_t cut : {std::size_t{2}, std::size_t{7}, good.size() - 1, good.size() - 13}) {
    std::istringstream t(good.substr(0, cut));
    EXPECT_THROW(FeatureStore::Read(t), DataError) << cut;
  }
  EXPECT_THROW(FeatureStore::ReadFile("/nonexistent/x.pfv"), DataError);
}

TEST(Features, MissingIdNamesTheImage) {
  const auto s = Small();
  try {
    s.Get(42);
    FAIL();
  } catch (const DataError &e) {
    EXPECT_NE(std::string(e.what()).find("42"), std::string::npos);
  }
}

TEST(Features, AddValidation) {
  FeatureStore s(2);
  EXPECT_THROW(s.Add(1, {1.0f}), InvalidArgument);
  EXPECT_THROW(s.Add(1, {1.0f, NAN}), InvalidArgument);
  EXPECT_THROW(FeatureStore(0), InvalidArgument);
}

TEST(Features, DistanceAndNormalize) {
  auto s = Small();
  EXPECT_DOUBLE_EQ(s.Distance(5, 2), std::sqrt(14.0));
  EXPECT_DOUBLE_EQ(s.Distance(5, 5), 0.0);
  s.NormalizeL2();
  const auto v = s.Get(5);
  EXPECT_NEAR(v[0] * v[0] + v[1] * v[1] + v[2] * v[2], 1.0, 1e-6);
  EXPECT_EQ(s.Get(2)[0], 0.0f);
  EXPECT_EQ(s.Ids(), (std::vector<ImageId>{2, 5, 9}));
}

TEST(Embeddings, ParseAndMean) {
  const auto t = EmbeddingTable::FromText("man 1 0\ndog 0 1\n# comment\n\ncat\t2 2\n");
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.Mean({"man", "dog"}), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(t.Mean({"man", "zebra"}), (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(t.Mean({"zebra"}), (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(t.Mean({}), (std::vector<double>{0.0, 0.0}));
}

TEST(Embeddings, ParseErrors) {
  try {
    EmbeddingTable::FromText("man 1 0\ndog 1\n", "emb");
    FAIL();
  } catch (const DataError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(EmbeddingTable::FromText("man 1 x\n"), DataError);
  EXPECT_THROW(EmbeddingTable::FromText("man\n"), DataError);
  EXPECT_THROW(EmbeddingTable::FromText("man 1 nan\n"), DataError);
}

}  // namespace
}  // namespace pforge
