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

#ifndef PREMISE_FORGE_FEATURES_HPP
#define PREMISE_FORGE_FEATURES_HPP

#include <bit>
#include <cstdlib>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "premise_forge/error.hpp"
#include "premise_forge/lexicon.hpp"
#include "premise_forge/question.hpp"

namespace pforge {

namespace detail {

inline void PutU32(std::ostream &os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b, 4);
}

inline void PutU64(std::ostream &os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b, 8);
}

inline void PutF32(std::ostream &os, float f) { PutU32(os, std::bit_cast<std::uint32_t>(f)); }

inline bool GetU32(std::istream &is, std::uint32_t &v) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char *>(b), 4)) return false;
  v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return true;
}

inline bool GetU64(std::istream &is, std::uint64_t &v) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char *>(b), 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return true;
}

inline bool GetF32(std::istream &is, float &f) {
  std::uint32_t u;
  if (!GetU32(is, u)) return false;
  f = std::bit_cast<float>(u);
  return true;
}

}  // namespace detail

inline double EuclideanDistance(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) throw InvalidArgument("vector dimensions differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

// Dense per-image vectors of one fixed dimension.
//
// Binary layout (little-endian): "PFV1", u32 dim, u32 count, then count
// records of (u64 image_id, dim x f32).
class FeatureStore {
 public:
  FeatureStore() = default;
  explicit FeatureStore(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw InvalidArgument("feature dimension must be positive");
  }

  void Add(ImageId id, std::vector<float> vec) {
    if (vec.size() != dim_) {
      throw InvalidArgument("feature for image " + std::to_string(id) + " has dimension " +
                            std::to_string(vec.size()) + ", expected " + std::to_string(dim_));
    }
    for (float f : vec) {
      if (!std::isfinite(f)) throw InvalidArgument("non-finite feature for image " + std::to_string(id));
    }
    vectors_[id] = std::move(vec);
  }

  bool Contains(ImageId id) const { return vectors_.count(id) > 0; }

  // Throws DataError naming the image when the vector is missing.
  std::span<const float> Get(ImageId id) const {
    auto it = vectors_.find(id);
    if (it == vectors_.end()) throw DataError("missing feature vector for image " + std::to_string(id));
    return it->second;
  }

  double Distance(ImageId a, ImageId b) const { return EuclideanDistance(Get(a), Get(b)); }

  // Scales every vector to unit L2 norm; zero vectors stay zero.
  void NormalizeL2() {
    for (auto &[id, v] : vectors_) {
      double n = 0.0;
      for (float f : v) n += static_cast<double>(f) * f;
      n = std::sqrt(n);
      if (n == 0.0) continue;
      for (float &f : v) f = static_cast<float>(f / n);
    }
  }

  std::vector<ImageId> Ids() const {
    std::vector<ImageId> out;
    for (const auto &[id, _] : vectors_) out.push_back(id);
    return out;
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }

  void Write(std::ostream &os) const {
    os.write("PFV1", 4);
    detail::PutU32(os, static_cast<std::uint32_t>(dim_));
    detail::PutU32(os, static_cast<std::uint32_t>(vectors_.size()));
    for (const auto &[id, v] : vectors_) {
      detail::PutU64(os, static_cast<std::uint64_t>(id));
      for (float f : v) detail::PutF32(os, f);
    }
  }

  void WriteFile(const std::string &path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DataError("cannot write '" + path + "'");
    Write(os);
  }

  static FeatureStore Read(std::istream &is, const std::string &source = "<features>") {
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "PFV1", 4) != 0) {
      throw DataError(source + ": bad magic, expected PFV1");
    }
    std::uint32_t dim = 0, count = 0;
    if (!detail::GetU32(is, dim) || !detail::GetU32(is, count)) throw DataError(source + ": truncated header");
    if (dim == 0) throw DataError(source + ": zero feature dimension");
    FeatureStore store(dim);
    for (std::uint32_t r = 0; r < count; ++r) {
      std::uint64_t id = 0;
      if (!detail::GetU64(is, id)) throw DataError(source + ": truncated at record " + std::to_string(r));
      std::vector<float> v(dim);
      for (auto &f : v) {
        if (!detail::GetF32(is, f)) throw DataError(source + ": truncated at record " + std::to_string(r));
      }
      try {
        store.Add(static_cast<ImageId>(id), std::move(v));
      } catch (const InvalidArgument &e) {
        throw DataError(source + ": record " + std::to_string(r) + ": " + e.what());
      }
    }
    return store;
  }

  static FeatureStore ReadFile(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw DataError("cannot open '" + path + "'");
    return Read(is, path);
  }

  friend bool operator==(const FeatureStore &, const FeatureStore &) = default;

 private:
  std::size_t dim_ = 0;
  std::map<ImageId, std::vector<float>> vectors_;
};

// Word vectors. Text format: `token v1 v2 ... vd` per line.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dim) : dim_(dim) {}

  void Add(std::string token, std::vector<float> vec) {
    if (dim_ == 0) dim_ = vec.size();
    if (vec.size() != dim_ || dim_ == 0) throw InvalidArgument("embedding dimension mismatch for '" + token + "'");
    vectors_[std::move(token)] = std::move(vec);
  }

  const std::vector<float> *Find(std::string_view token) const {
    auto it = vectors_.find(std::string(token));
    return it == vectors_.end() ? nullptr : &it->second;
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }

  // Mean of the token vectors; out-of-vocabulary tokens are skipped and an
  // all-OOV input gives the zero vector.
  std::vector<double> Mean(const std::vector<std::string> &tokens) const {
    std::vector<double> out(dim_, 0.0);
    std::size_t n = 0;
    for (const auto &t : tokens) {
      const auto *v = Find(t);
      if (!v) continue;
      for (std::size_t i = 0; i < dim_; ++i) out[i] += (*v)[i];
      ++n;
    }
    if (n > 0) {
      for (auto &x : out) x /= static_cast<double>(n);
    }
    return out;
  }

  static EmbeddingTable FromText(std::string_view text, const std::string &source = "<embeddings>") {
    EmbeddingTable table;
    detail::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
      std::size_t sp = line.find_first_of(" \t");
      if (sp == std::string_view::npos) throw DataError(source, line_no, "expected token followed by values");
      std::string token(line.substr(0, sp));
      std::vector<float> vec;
      std::string_view rest = line.substr(sp);
      while (true) {
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
        if (rest.empty()) break;
        std::size_t end = rest.find_first_of(" \t");
        std::string piece(rest.substr(0, end));
        char *stop = nullptr;
        float f = std::strtof(piece.c_str(), &stop);
        if (stop == piece.c_str() || *stop != '\0' || !std::isfinite(f)) {
          throw DataError(source, line_no, "bad number '" + piece + "'");
        }
        vec.push_back(f);
        rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
      }
      try {
        table.Add(std::move(token), std::move(vec));
      } catch (const InvalidArgument &e) {
        throw DataError(source, line_no, e.what());
      }
    });
    return table;
  }

  static EmbeddingTable FromFile(const std::string &path) { return FromText(detail::ReadFile(path), path); }

 private:
  std::size_t dim_ = 0;
  std::unordered_map<std::string, std::vector<float>> vectors_;
};

}  // namespace pforge

#endif  // PREMISE_FORGE_FEATURES_HPP
