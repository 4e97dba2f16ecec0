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

#ifndef PREMISE_FORGE_QRPE_HPP
#define PREMISE_FORGE_QRPE_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "premise_forge/annotations.hpp"
#include "premise_forge/extraction.hpp"
#include "premise_forge/features.hpp"
#include "premise_forge/premise.hpp"
#include "premise_forge/question.hpp"

namespace pforge {

// (I+, Q, P, I-): Q is relevant to I+ and irrelevant to I- because P is
// false there.
struct QrpeTuple {
  ImageId pos_image = 0;
  QuestionId question_id = 0;
  Premise premise;
  ImageId neg_image = 0;
  double distance = 0.0;
  std::optional<std::string> split;

  friend bool operator==(const QrpeTuple &, const QrpeTuple &) = default;
};

class NoNegativeFound : public Error {
 public:
  NoNegativeFound() : Error("no negative found") {}
};

// Premises the builder checks: first and second order only.
inline std::vector<Premise> CheckablePremises(const std::vector<Premise> &premises) {
  std::vector<Premise> out;
  for (const auto &p : premises) {
    if (p.order() != Order::Third) out.push_back(p);
  }
  return out;
}

// True when `image` falsifies `target` while every other checked premise of
// the question stays true. A first-order target <x> exempts premises that
// mention x (they are implied false), and third-order premises are never
// checked. A second-order target <x, a> also needs <x> itself to be true.
inline bool FalsifiesOnly(const AnnotationStore &store, const std::vector<Premise> &question_premises,
                          const Premise &target, ImageId image) {
  if (target.order() == Order::Third) throw InvalidArgument("unsupported premise order");
  if (store.PremiseHolds(target, image) != TruthValue::False) return false;
  if (target.order() == Order::Second &&
      store.PremiseHolds(Premise(target.object()), image) != TruthValue::True) {
    return false;
  }
  for (const auto &p : question_premises) {
    if (p == target || p.order() == Order::Third) continue;
    if (target.order() == Order::First && p.Mentions(target.object())) continue;
    if (store.PremiseHolds(p, image) != TruthValue::True) return false;
  }
  return true;
}

// Images (other than `pos_image`) with exactly the target premise false.
// The search space is every image with object-presence annotations.
inline std::set<ImageId> FindCandidates(const AnnotationStore &store, const std::vector<Premise> &question_premises,
                                        const Premise &target, ImageId pos_image) {
  std::set<ImageId> out;
  for (ImageId image : store.AnnotatedImages()) {
    if (image == pos_image) continue;
    if (FalsifiesOnly(store, question_premises, target, image)) out.insert(image);
  }
  return out;
}

// Nearest candidate to `pos_image` in feature space; ties go to the
// smallest id.
inline std::pair<ImageId, double> SelectNegative(const std::set<ImageId> &candidates, ImageId pos_image,
                                                 const FeatureStore &features) {
  if (candidates.empty()) throw NoNegativeFound();
  const auto pos = features.Get(pos_image);
  std::optional<std::pair<ImageId, double>> best;
  for (ImageId c : candidates) {  // ascending, so strict < keeps the smallest id on ties
    const double d = EuclideanDistance(pos, features.Get(c));
    if (!best || d < best->second) best = {c, d};
  }
  return *best;
}

struct BuildOptions {
  unsigned threads = 1;
};

// Premise-level relevance check of the positive image: a question whose
// checked premise is annotated false on its own image is skipped.
inline bool PositiveConsistent(const AnnotationStore &store, const std::vector<Premise> &premises, ImageId image) {
  for (const auto &p : premises) {
    if (p.order() != Order::Third && store.PremiseHolds(p, image) == TruthValue::False) return false;
  }
  return true;
}

inline std::vector<QrpeTuple> BuildForQuestion(const Question &q, const std::vector<Premise> &premises,
                                               const AnnotationStore &store, const FeatureStore &features) {
  std::vector<QrpeTuple> out;
  const auto checked = CheckablePremises(premises);
  if (checked.empty() || !PositiveConsistent(store, checked, q.image_id)) return out;
  for (const auto &target : checked) {
    const auto candidates = FindCandidates(store, checked, target, q.image_id);
    if (candidates.empty()) continue;
    auto [neg, dist] = SelectNegative(candidates, q.image_id, features);
    out.push_back(QrpeTuple{q.image_id, q.question_id, target, neg, dist, q.split});
  }
  return out;
}

// One tuple per (question, first/second-order premise) with a falsifying
// image. Questions are extracted in strict mode. Output is ordered by
// question id, then premise order, for any thread count.
inline std::vector<QrpeTuple> BuildDataset(const std::vector<Question> &questions, const AnnotationStore &store,
                                           const FeatureStore &features, const BuildOptions &options = {},
                                           const LanguageResources &res = LanguageResources::Bundled()) {
  std::vector<std::size_t> order(questions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return questions[a].question_id < questions[b].question_id;
  });

  std::vector<std::vector<QrpeTuple>> per_question(questions.size());
  auto work = [&](std::size_t k) {
    const Question &q = questions[order[k]];
    per_question[k] = BuildForQuestion(q, ExtractPremises(q, ExtractionMode::Strict, res), store, features);
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || questions.size() < 2) {
    for (std::size_t k = 0; k < order.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < order.size(); k = next++) {
          try {
            work(k);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto &th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  std::vector<QrpeTuple> out;
  for (auto &v : per_question) {
    for (auto &t : v) out.push_back(std::move(t));
  }
  return out;
}

// Classifier example derived from a tuple. Both halves of a tuple carry the
// order of its falsified premise so per-order accuracy covers both labels.
struct RelevanceRecord {
  QuestionId question_id = 0;
  ImageId image_id = 0;
  int label = 0;  // 1 relevant, 0 irrelevant
  std::optional<int> falsified_order;
  std::optional<Premise> premise;
  std::optional<std::string> caption;

  friend bool operator==(const RelevanceRecord &, const RelevanceRecord &) = default;
};

inline std::vector<RelevanceRecord> BalancedRecords(const std::vector<QrpeTuple> &tuples) {
  std::vector<RelevanceRecord> out;
  out.reserve(tuples.size() * 2);
  for (const auto &t : tuples) {
    const int order = to_int(t.premise.order());
    out.push_back(RelevanceRecord{t.question_id, t.pos_image, 1, order, t.premise, std::nullopt});
    out.push_back(RelevanceRecord{t.question_id, t.neg_image, 0, order, t.premise, std::nullopt});
  }
  return out;
}

struct DatasetStats {
  std::size_t total = 0;
  std::size_t unique_premises = 0;
  std::size_t unique_questions = 0;
  std::size_t first_order = 0;
  std::size_t second_order = 0;
  std::map<std::string, std::size_t> by_split;

  friend bool operator==(const DatasetStats &, const DatasetStats &) = default;
};

inline DatasetStats ComputeDatasetStats(const std::vector<QrpeTuple> &tuples) {
  DatasetStats s;
  std::unordered_set<std::string> premises;
  std::unordered_set<QuestionId> questions;
  for (const auto &t : tuples) {
    ++s.total;
    premises.insert(t.premise.Canonical());
    questions.insert(t.question_id);
    if (t.premise.order() == Order::First) ++s.first_order;
    if (t.premise.order() == Order::Second) ++s.second_order;
    if (t.split) ++s.by_split[*t.split];
  }
  s.unique_premises = premises.size();
  s.unique_questions = questions.size();
  return s;
}

struct DistanceHistogram {
  double bucket_width = 1.0;
  std::vector<std::size_t> counts;  // bucket k covers [k*w, (k+1)*w)
  double mean = 0.0;
  std::size_t n = 0;

  // Tab-separated "lower upper count" rows followed by a "mean" row.
  std::string ToText() const {
    std::string out = "# lower\tupper\tcount\n";
    char buf[128];
    for (std::size_t k = 0; k < counts.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.6g\t%.6g\t%zu\n", k * bucket_width, (k + 1) * bucket_width, counts[k]);
      out += buf;
    }
    std::snprintf(buf, sizeof buf, "mean\t%.9g\nn\t%zu\n", mean, n);
    out += buf;
    return out;
  }
};

inline DistanceHistogram PairDistanceHistogram(const std::vector<std::pair<ImageId, ImageId>> &pairs,
                                               const FeatureStore &features, double bucket_width) {
  if (!(bucket_width > 0.0)) throw InvalidArgument("bucket width must be positive");
  DistanceHistogram h;
  h.bucket_width = bucket_width;
  double sum = 0.0;
  for (const auto &[a, b] : pairs) {
    const double d = features.Distance(a, b);
    const auto bucket = static_cast<std::size_t>(std::floor(d / bucket_width));
    if (bucket >= h.counts.size()) h.counts.resize(bucket + 1, 0);
    ++h.counts[bucket];
    sum += d;
  }
  h.n = pairs.size();
  h.mean = pairs.empty() ? 0.0 : sum / static_cast<double>(pairs.size());
  return h;
}

inline std::vector<std::pair<ImageId, ImageId>> TuplePairs(const std::vector<QrpeTuple> &tuples) {
  std::vector<std::pair<ImageId, ImageId>> out;
  for (const auto &t : tuples) out.emplace_back(t.pos_image, t.neg_image);
  return out;
}

// Baseline pairing for distance comparisons: each positive image paired
// with a uniformly random different image from `pool`.
inline std::vector<std::pair<ImageId, ImageId>> RandomPairs(const std::vector<ImageId> &positives,
                                                            const std::vector<ImageId> &pool,
                                                            std::uint64_t seed) {
  if (pool.size() < 2) throw InvalidArgument("random pairing needs at least two images");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<ImageId, ImageId>> out;
  for (ImageId p : positives) {
    ImageId other = p;
    while (other == p) other = pool[rng() % pool.size()];
    out.emplace_back(p, other);
  }
  return out;
}

// Lowercase word forms used for embedding lookups.
inline std::vector<std::string> QuestionWords(std::string_view text,
                                              const LanguageResources &res = LanguageResources::Bundled()) {
  std::vector<std::string> out;
  for (const auto &t : TokenizeAndTag(text, res.lexicon)) {
    if (t.tag == Tag::Poss) continue;
    out.push_back(ToLower(t.surface));
  }
  return out;
}

inline double CosineSimilarity(const std::vector<double> &a, const std::vector<double> &b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// Corpus question whose mean word embedding has the highest cosine
// similarity with q's; ties go to the smallest id.
inline QuestionId NearestQuestion(const Question &q, const std::vector<Question> &corpus,
                                  const EmbeddingTable &embeddings,
                                  const LanguageResources &res = LanguageResources::Bundled()) {
  if (corpus.empty()) throw InvalidArgument("empty question corpus");
  const auto target = embeddings.Mean(QuestionWords(q.text, res));
  std::optional<std::pair<QuestionId, double>> best;
  for (const auto &c : corpus) {
    const double sim = CosineSimilarity(target, embeddings.Mean(QuestionWords(c.text, res)));
    if (!best || sim > best->second || (sim == best->second && c.question_id < best->first)) {
      best = {c.question_id, sim};
    }
  }
  return best->first;
}

}  // namespace pforge

#endif  // PREMISE_FORGE_QRPE_HPP
