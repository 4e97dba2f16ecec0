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

#ifndef PREMISE_FORGE_NN_HPP
#define PREMISE_FORGE_NN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "premise_forge/error.hpp"
#include "premise_forge/features.hpp"
#include "premise_forge/premise.hpp"

namespace pforge {

enum class TextMode { BagOfWords, MeanEmbedding };

inline std::string_view TextModeName(TextMode m) {
  return m == TextMode::BagOfWords ? "bag_of_words" : "mean_embedding";
}

inline std::optional<TextMode> ParseTextMode(std::string_view s) {
  if (s == "bag_of_words") return TextMode::BagOfWords;
  if (s == "mean_embedding") return TextMode::MeanEmbedding;
  return std::nullopt;
}

enum class ModelKind { RelQ, RelQP, CapQC, CapPC, CapQPC, FPD };

inline constexpr ModelKind kAllModelKinds[] = {ModelKind::RelQ,  ModelKind::RelQP,  ModelKind::CapQC,
                                               ModelKind::CapPC, ModelKind::CapQPC, ModelKind::FPD};

inline std::string_view ModelKindName(ModelKind k) {
  switch (k) {
    case ModelKind::RelQ: return "rel-q";
    case ModelKind::RelQP: return "rel-qp";
    case ModelKind::CapQC: return "cap-qc";
    case ModelKind::CapPC: return "cap-pc";
    case ModelKind::CapQPC: return "cap-qpc";
    case ModelKind::FPD: return "fpd";
  }
  return "rel-q";
}

inline std::optional<ModelKind> ParseModelKind(std::string_view s) {
  for (ModelKind k : kAllModelKinds) {
    if (ModelKindName(k) == s) return k;
  }
  return std::nullopt;
}

// Which input blocks a kind concatenates, in layout order.
struct InputBlocks {
  bool question = false;
  bool premises = false;
  bool caption = false;
  bool image = false;
};

inline InputBlocks BlocksFor(ModelKind k) {
  switch (k) {
    case ModelKind::RelQ: return {true, false, false, true};
    case ModelKind::RelQP: return {true, true, false, true};
    case ModelKind::CapQC: return {true, false, true, false};
    case ModelKind::CapPC: return {false, true, true, false};
    case ModelKind::CapQPC: return {true, true, true, false};
    case ModelKind::FPD: return {false, true, false, true};
  }
  return {};
}

// How text, premises and images become one input vector. Layout is
// [question | premise_1 | premise_2 | caption | image], keeping only the
// blocks the model kind uses.
struct EncodingSpec {
  TextMode question_mode = TextMode::BagOfWords;
  std::vector<std::string> question_vocab;  // BagOfWords only
  std::vector<std::string> premise_vocab_1;
  std::vector<std::pair<std::string, std::string>> premise_vocab_2;
  std::size_t image_dim = 0;
  std::optional<TextMode> caption_mode;
  std::vector<std::string> caption_vocab;
  std::shared_ptr<const EmbeddingTable> embeddings;  // MeanEmbedding only

  std::size_t TextDim(TextMode mode, const std::vector<std::string> &vocab) const {
    if (mode == TextMode::BagOfWords) return vocab.size();
    return embeddings ? embeddings->dim() : 0;
  }
  std::size_t QuestionDim() const { return TextDim(question_mode, question_vocab); }
  std::size_t PremiseDim() const { return premise_vocab_1.size() + premise_vocab_2.size(); }
  std::size_t CaptionDim() const { return caption_mode ? TextDim(*caption_mode, caption_vocab) : 0; }

  std::size_t InputDim(ModelKind kind) const {
    const InputBlocks b = BlocksFor(kind);
    return (b.question ? QuestionDim() : 0) + (b.premises ? PremiseDim() : 0) + (b.caption ? CaptionDim() : 0) +
           (b.image ? image_dim : 0);
  }

  // Throws InvalidArgument when vocabularies repeat entries or a block the
  // kind needs has zero width.
  void Validate(ModelKind kind) const {
    auto unique = [](const auto &v) { return std::set(v.begin(), v.end()).size() == v.size(); };
    if (!unique(question_vocab) || !unique(premise_vocab_1) || !unique(premise_vocab_2) || !unique(caption_vocab)) {
      throw InvalidArgument("encoding vocabularies must be deduplicated");
    }
    const InputBlocks b = BlocksFor(kind);
    if (b.question && QuestionDim() == 0) throw InvalidArgument("question encoding has zero width");
    if (b.premises && PremiseDim() == 0) throw InvalidArgument("premise encoding has zero width");
    if (b.caption && CaptionDim() == 0) throw InvalidArgument("caption encoding has zero width");
    if (b.image && image_dim == 0) throw InvalidArgument("image dimension must be positive");
  }
};

inline std::vector<double> EncodeText(const std::vector<std::string> &tokens, TextMode mode,
                                      const std::vector<std::string> &vocab, const EmbeddingTable *embeddings) {
  if (mode == TextMode::MeanEmbedding) {
    if (!embeddings) throw InvalidArgument("mean-embedding encoding needs an embedding table");
    return embeddings->Mean(tokens);
  }
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < vocab.size(); ++i) index.emplace(vocab[i], i);
  std::vector<double> out(vocab.size(), 0.0);
  for (const auto &t : tokens) {
    auto it = index.find(t);
    if (it != index.end()) out[it->second] += 1.0;
  }
  return out;
}

inline std::vector<double> EncodeQuestion(const std::vector<std::string> &tokens, const EncodingSpec &spec) {
  return EncodeText(tokens, spec.question_mode, spec.question_vocab, spec.embeddings.get());
}

inline std::vector<double> EncodeCaption(const std::vector<std::string> &tokens, const EncodingSpec &spec) {
  if (!spec.caption_mode) throw InvalidArgument("encoding spec has no caption mode");
  return EncodeText(tokens, *spec.caption_mode, spec.caption_vocab, spec.embeddings.get());
}

// Multi-hot over first-order lemmas, then over (object, attribute) pairs.
// A third-order premise sets the entries of its subject and object.
inline std::vector<double> EncodePremises(const std::vector<Premise> &premises, const EncodingSpec &spec) {
  std::vector<double> out(spec.PremiseDim(), 0.0);
  auto set_first = [&](const std::string &lemma) {
    auto it = std::find(spec.premise_vocab_1.begin(), spec.premise_vocab_1.end(), lemma);
    if (it != spec.premise_vocab_1.end()) out[it - spec.premise_vocab_1.begin()] = 1.0;
  };
  for (const auto &p : premises) {
    switch (p.order()) {
      case Order::First: set_first(p.part(0)); break;
      case Order::Second: {
        const std::pair<std::string, std::string> key{p.part(0), p.part(1)};
        auto it = std::find(spec.premise_vocab_2.begin(), spec.premise_vocab_2.end(), key);
        if (it != spec.premise_vocab_2.end()) {
          out[spec.premise_vocab_1.size() + (it - spec.premise_vocab_2.begin())] = 1.0;
        }
        break;
      }
      case Order::Third:
        set_first(p.part(0));
        set_first(p.part(2));
        break;
    }
  }
  return out;
}

// Everything a model kind might read for one example.
struct ModelExample {
  std::vector<std::string> question_tokens;
  std::vector<Premise> premises;
  std::vector<std::string> caption_tokens;
  std::vector<float> image;
  int label = 0;
  std::optional<int> falsified_order;
};

inline std::vector<double> EncodeExample(ModelKind kind, const EncodingSpec &spec, const ModelExample &ex) {
  const InputBlocks b = BlocksFor(kind);
  std::vector<double> x;
  x.reserve(spec.InputDim(kind));
  auto append = [&](const std::vector<double> &v) { x.insert(x.end(), v.begin(), v.end()); };
  if (b.question) append(EncodeQuestion(ex.question_tokens, spec));
  if (b.premises) append(EncodePremises(ex.premises, spec));
  if (b.caption) append(EncodeCaption(ex.caption_tokens, spec));
  if (b.image) {
    if (ex.image.size() != spec.image_dim) {
      throw InvalidArgument("image feature has dimension " + std::to_string(ex.image.size()) + ", expected " +
                            std::to_string(spec.image_dim));
    }
    x.insert(x.end(), ex.image.begin(), ex.image.end());
  }
  return x;
}

namespace detail {

inline double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + e^z) without overflow.
inline double Softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

// Uniform in [0, 1) from the top 53 bits.
inline double UnitDouble(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

// Fully connected network: rectifier hidden layers, one logistic output.
// Parameters live in double; weights of layer l are row-major
// [sizes[l+1] x sizes[l]].
class MlpModel {
 public:
  struct Layer {
    std::size_t in = 0, out = 0;
    std::vector<double> w;
    std::vector<double> b;
    friend bool operator==(const Layer &, const Layer &) = default;
  };

  MlpModel() = default;

  // Zero parameters.
  explicit MlpModel(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.size() < 2) throw InvalidArgument("a model needs at least an input and an output layer");
    if (sizes_.back() != 1) throw InvalidArgument("output layer must have exactly one unit");
    for (std::size_t d : sizes_) {
      if (d == 0) throw InvalidArgument("layer sizes must be positive");
    }
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
      layers_.push_back(Layer{sizes_[l], sizes_[l + 1], std::vector<double>(sizes_[l] * sizes_[l + 1], 0.0),
                              std::vector<double>(sizes_[l + 1], 0.0)});
    }
  }

  // Weights uniform in +-1/sqrt(fan_in), biases zero.
  static MlpModel Random(std::vector<std::size_t> sizes, std::uint64_t seed) {
    MlpModel m(std::move(sizes));
    std::mt19937_64 rng(seed);
    for (auto &layer : m.layers_) {
      const double scale = 1.0 / std::sqrt(static_cast<double>(layer.in));
      for (double &w : layer.w) w = (2.0 * detail::UnitDouble(rng) - 1.0) * scale;
    }
    return m;
  }

  const std::vector<std::size_t> &sizes() const { return sizes_; }
  std::size_t input_dim() const { return sizes_.empty() ? 0 : sizes_.front(); }
  const std::vector<Layer> &layers() const { return layers_; }
  std::vector<Layer> &layers() { return layers_; }

  std::size_t ParameterCount() const {
    std::size_t n = 0;
    for (const auto &l : layers_) n += l.w.size() + l.b.size();
    return n;
  }

  // Flat view: layer by layer, weights then biases.
  double &Param(std::size_t i) {
    for (auto &l : layers_) {
      if (i < l.w.size()) return l.w[i];
      i -= l.w.size();
      if (i < l.b.size()) return l.b[i];
      i -= l.b.size();
    }
    throw InvalidArgument("parameter index out of range");
  }

  bool AllFinite() const {
    for (const auto &l : layers_) {
      for (double v : l.w) if (!std::isfinite(v)) return false;
      for (double v : l.b) if (!std::isfinite(v)) return false;
    }
    return true;
  }

  // Output pre-activation.
  double Logit(std::span<const double> x) const {
    CheckInput(x);
    std::vector<double> a(x.begin(), x.end()), z;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
      Affine(layers_[l], a, z);
      if (l + 1 < layers_.size()) {
        for (double &v : z) v = std::max(0.0, v);
      }
      a.swap(z);
    }
    return a[0];
  }

  double Forward(std::span<const double> x) const { return detail::Sigmoid(Logit(x)); }

  // Binary cross-entropy for one example.
  double Loss(std::span<const double> x, int label) const {
    const double z = Logit(x);
    return detail::Softplus(z) - label * z;
  }

  // Adds d(loss)/d(param) into `grad` (same shape as layers()) and returns
  // the loss.
  double Backprop(std::span<const double> x, int label, std::vector<Layer> &grad) const {
    CheckInput(x);
    std::vector<std::vector<double>> acts{std::vector<double>(x.begin(), x.end())};
    std::vector<double> z;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
      Affine(layers_[l], acts.back(), z);
      if (l + 1 < layers_.size()) {
        for (double &v : z) v = std::max(0.0, v);
      }
      acts.push_back(z);
    }
    const double logit = acts.back()[0];
    const double loss = detail::Softplus(logit) - label * logit;
    std::vector<double> delta{detail::Sigmoid(logit) - label};
    for (std::size_t l = layers_.size(); l-- > 0;) {
      const Layer &layer = layers_[l];
      const auto &in = acts[l];
      Layer &g = grad[l];
      for (std::size_t o = 0; o < layer.out; ++o) {
        g.b[o] += delta[o];
        if (delta[o] == 0.0) continue;
        for (std::size_t i = 0; i < layer.in; ++i) g.w[o * layer.in + i] += delta[o] * in[i];
      }
      if (l == 0) break;
      std::vector<double> prev(layer.in, 0.0);
      for (std::size_t o = 0; o < layer.out; ++o) {
        for (std::size_t i = 0; i < layer.in; ++i) prev[i] += layer.w[o * layer.in + i] * delta[o];
      }
      // rectifier derivative: the hidden activation was positive
      for (std::size_t i = 0; i < layer.in; ++i) {
        if (in[i] <= 0.0) prev[i] = 0.0;
      }
      delta.swap(prev);
    }
    return loss;
  }

  std::vector<Layer> ZeroGrad() const {
    std::vector<Layer> g = layers_;
    for (auto &l : g) {
      std::fill(l.w.begin(), l.w.end(), 0.0);
      std::fill(l.b.begin(), l.b.end(), 0.0);
    }
    return g;
  }

  // Rounds every parameter to the nearest float, so the binary model file
  // holds exactly the in-memory values.
  void RoundToFloat() {
    for (auto &l : layers_) {
      for (double &v : l.w) v = static_cast<float>(v);
      for (double &v : l.b) v = static_cast<float>(v);
    }
  }

  // "PMLP", u32 version, u32 layer count, u32 dims, then per layer the f32
  // weights (row-major) followed by the f32 biases. Little-endian.
  void Write(std::ostream &os) const {
    os.write("PMLP", 4);
    detail::PutU32(os, kVersion);
    detail::PutU32(os, static_cast<std::uint32_t>(sizes_.size()));
    for (std::size_t d : sizes_) detail::PutU32(os, static_cast<std::uint32_t>(d));
    for (const auto &l : layers_) {
      for (double v : l.w) detail::PutF32(os, static_cast<float>(v));
      for (double v : l.b) detail::PutF32(os, static_cast<float>(v));
    }
  }

  void WriteFile(const std::string &path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DataError("cannot write '" + path + "'");
    Write(os);
  }

  static MlpModel Read(std::istream &is, const std::string &source = "<model>") {
    char magic[4];
    if (!is.read(magic, 4) || std::string_view(magic, 4) != "PMLP") throw DataError(source + ": bad magic, expected PMLP");
    std::uint32_t version = 0, count = 0;
    if (!detail::GetU32(is, version) || !detail::GetU32(is, count)) throw DataError(source + ": truncated header");
    if (version != kVersion) throw DataError(source + ": unsupported model version " + std::to_string(version));
    if (count < 2 || count > 64) throw DataError(source + ": bad layer count " + std::to_string(count));
    std::vector<std::size_t> sizes;
    for (std::uint32_t i = 0; i < count; ++i) {
      std::uint32_t d = 0;
      if (!detail::GetU32(is, d)) throw DataError(source + ": truncated header");
      sizes.push_back(d);
    }
    MlpModel m;
    try {
      m = MlpModel(sizes);
    } catch (const InvalidArgument &e) {
      throw DataError(source + ": " + e.what());
    }
    for (auto &l : m.layers_) {
      for (auto *vec : {&l.w, &l.b}) {
        for (double &v : *vec) {
          float f = 0;
          if (!detail::GetF32(is, f)) throw DataError(source + ": truncated parameters");
          if (!std::isfinite(f)) throw DataError(source + ": non-finite parameter");
          v = f;
        }
      }
    }
    return m;
  }

  static MlpModel ReadFile(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw DataError("cannot open '" + path + "'");
    return Read(is, path);
  }

  friend bool operator==(const MlpModel &, const MlpModel &) = default;

  static constexpr std::uint32_t kVersion = 1;

 private:
  void CheckInput(std::span<const double> x) const {
    if (layers_.empty()) throw InvalidArgument("empty model");
    if (x.size() != sizes_.front()) {
      throw InvalidArgument("input has dimension " + std::to_string(x.size()) + ", model expects " +
                            std::to_string(sizes_.front()));
    }
  }

  static void Affine(const Layer &layer, const std::vector<double> &in, std::vector<double> &out) {
    out.assign(layer.b.begin(), layer.b.end());
    for (std::size_t o = 0; o < layer.out; ++o) {
      const double *row = &layer.w[o * layer.in];
      double s = 0.0;
      for (std::size_t i = 0; i < layer.in; ++i) s += row[i] * in[i];
      out[o] += s;
    }
  }

  std::vector<std::size_t> sizes_;
  std::vector<Layer> layers_;
};

inline constexpr double kGradientCheckStep = 1e-4;

// Max over parameters of |analytic - numeric| / max(|analytic|, |numeric|,
// floor), numeric by central differences.
inline double GradientCheck(const MlpModel &model, std::span<const double> x, int label,
                            double step = kGradientCheckStep, double floor = 1e-8) {
  auto grad = model.ZeroGrad();
  model.Backprop(x, label, grad);
  std::vector<double> analytic;
  for (const auto &l : grad) {
    analytic.insert(analytic.end(), l.w.begin(), l.w.end());
    analytic.insert(analytic.end(), l.b.begin(), l.b.end());
  }
  MlpModel probe = model;
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    double &p = probe.Param(i);
    const double saved = p;
    p = saved + step;
    const double up = probe.Loss(x, label);
    p = saved - step;
    const double down = probe.Loss(x, label);
    p = saved;
    const double numeric = (up - down) / (2.0 * step);
    const double denom = std::max({std::abs(analytic[i]), std::abs(numeric), floor});
    worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
  }
  return worst;
}

enum class Optimizer { Sgd, Adam };

inline std::string_view OptimizerName(Optimizer o) { return o == Optimizer::Sgd ? "sgd" : "adam"; }

inline std::optional<Optimizer> ParseOptimizer(std::string_view s) {
  if (s == "sgd") return Optimizer::Sgd;
  if (s == "adam") return Optimizer::Adam;
  return std::nullopt;
}

struct TrainOptions {
  std::vector<std::size_t> hidden{64};
  double lr = 0.1;
  std::size_t epochs = 200;
  std::size_t batch = 16;
  std::uint64_t seed = 1;
  Optimizer optimizer = Optimizer::Sgd;
  double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
};

struct TrainResult {
  MlpModel model;
  std::vector<double> epoch_loss;  // mean loss over the full set after each epoch
};

class TrainingDiverged : public Error {
 public:
  using Error::Error;
};

// Mini-batch training on pre-encoded inputs. Initialization and shuffling
// are seeded; the result depends on nothing else.
inline TrainResult Train(const std::vector<std::vector<double>> &inputs, const std::vector<int> &labels,
                         const TrainOptions &opt) {
  if (inputs.empty()) throw InvalidArgument("empty training set");
  if (inputs.size() != labels.size()) throw InvalidArgument("inputs and labels differ in length");
  if (opt.batch == 0) throw InvalidArgument("batch size must be positive");
  if (!(opt.lr > 0.0) || !std::isfinite(opt.lr)) throw InvalidArgument("learning rate must be positive");
  for (int y : labels) {
    if (y != 0 && y != 1) throw InvalidArgument("labels must be 0 or 1");
  }
  std::vector<std::size_t> sizes{inputs.front().size()};
  sizes.insert(sizes.end(), opt.hidden.begin(), opt.hidden.end());
  sizes.push_back(1);

  TrainResult result{MlpModel::Random(sizes, opt.seed), {}};
  MlpModel &model = result.model;
  std::mt19937_64 shuffle_rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(inputs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  auto m1 = model.ZeroGrad(), m2 = model.ZeroGrad();
  std::uint64_t step = 0;

  for (std::size_t epoch = 0; epoch < opt.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[shuffle_rng() % i]);
    for (std::size_t start = 0; start < order.size(); start += opt.batch) {
      const std::size_t end = std::min(order.size(), start + opt.batch);
      auto grad = model.ZeroGrad();
      for (std::size_t k = start; k < end; ++k) model.Backprop(inputs[order[k]], labels[order[k]], grad);
      const double scale = 1.0 / static_cast<double>(end - start);
      ++step;
      auto &layers = model.layers();
      for (std::size_t l = 0; l < layers.size(); ++l) {
        auto update = [&](std::vector<double> &p, std::vector<double> &g, std::vector<double> &v1,
                          std::vector<double> &v2) {
          for (std::size_t i = 0; i < p.size(); ++i) {
            const double gi = g[i] * scale;
            if (opt.optimizer == Optimizer::Sgd) {
              p[i] -= opt.lr * gi;
            } else {
              v1[i] = opt.beta1 * v1[i] + (1 - opt.beta1) * gi;
              v2[i] = opt.beta2 * v2[i] + (1 - opt.beta2) * gi * gi;
              const double mh = v1[i] / (1 - std::pow(opt.beta1, static_cast<double>(step)));
              const double vh = v2[i] / (1 - std::pow(opt.beta2, static_cast<double>(step)));
              p[i] -= opt.lr * mh / (std::sqrt(vh) + opt.eps);
            }
          }
        };
        update(layers[l].w, grad[l].w, m1[l].w, m2[l].w);
        update(layers[l].b, grad[l].b, m1[l].b, m2[l].b);
      }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) total += model.Loss(inputs[i], labels[i]);
    const double mean = total / static_cast<double>(inputs.size());
    if (!std::isfinite(mean) || !model.AllFinite()) {
      throw TrainingDiverged("training diverged at epoch " + std::to_string(epoch + 1) +
                             ": loss is not finite (try a smaller learning rate)");
    }
    result.epoch_loss.push_back(mean);
  }
  model.RoundToFloat();
  return result;
}

inline TrainResult TrainModel(ModelKind kind, const EncodingSpec &spec, const std::vector<ModelExample> &data,
                              const TrainOptions &opt) {
  if (data.empty()) throw InvalidArgument("empty training set");
  spec.Validate(kind);
  std::vector<std::vector<double>> xs;
  std::vector<int> ys;
  for (const auto &ex : data) {
    xs.push_back(EncodeExample(kind, spec, ex));
    ys.push_back(ex.label);
  }
  return Train(xs, ys, opt);
}

inline constexpr double kDecisionThreshold = 0.5;

struct Accuracy {
  std::size_t correct = 0;
  std::size_t total = 0;
  double value() const { return total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0; }
};

struct EvalResult {
  Accuracy overall, first_order, second_order;
};

// Accuracy at threshold 0.5, overall and split by the order of the
// falsified premise attached to each example.
inline EvalResult Evaluate(const MlpModel &model, ModelKind kind, const EncodingSpec &spec,
                           const std::vector<ModelExample> &data) {
  EvalResult r;
  for (const auto &ex : data) {
    const int pred = model.Forward(EncodeExample(kind, spec, ex)) >= kDecisionThreshold ? 1 : 0;
    const bool ok = pred == ex.label;
    auto count = [&](Accuracy &a) {
      ++a.total;
      if (ok) ++a.correct;
    };
    count(r.overall);
    if (ex.falsified_order == 1) count(r.first_order);
    if (ex.falsified_order == 2) count(r.second_order);
  }
  return r;
}

// True when the premise is predicted grounded in the image.
inline bool FpdPredict(const MlpModel &model, const EncodingSpec &spec, const Premise &premise,
                       std::span<const float> image) {
  ModelExample ex;
  ex.premises = {premise};
  ex.image.assign(image.begin(), image.end());
  return model.Forward(EncodeExample(ModelKind::FPD, spec, ex)) >= kDecisionThreshold;
}

}  // namespace pforge

#endif  // PREMISE_FORGE_NN_HPP
