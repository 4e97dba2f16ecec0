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

#ifndef PREMISE_FORGE_PREMISE_HPP
#define PREMISE_FORGE_PREMISE_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "premise_forge/error.hpp"

namespace pforge {

// Number of parts in a premise tuple: an object, an attributed object, or a
// subject-relation-object triple.
enum class Order { First = 1, Second = 2, Third = 3 };

inline int to_int(Order order) { return static_cast<int>(order); }

// A semantic tuple implied by a question. Parts are lowercase lemmas; the
// relation lemma of a third-order premise may span several words
// ("looking at", "on top of").
class Premise {
 public:
  Premise() = default;

  explicit Premise(std::string object) : parts_{std::move(object)} { Validate(); }
  Premise(std::string object, std::string attribute)
      : parts_{std::move(object), std::move(attribute)} {
    Validate();
  }
  Premise(std::string subject, std::string relation, std::string object)
      : parts_{std::move(subject), std::move(relation), std::move(object)} {
    Validate();
  }

  // Builds a premise from an arbitrary part list; throws InvalidArgument
  // with "bad premise arity" unless there are 1 to 3 parts.
  static Premise FromParts(std::vector<std::string> parts) {
    Premise p;
    p.parts_ = std::move(parts);
    p.Validate();
    return p;
  }

  Order order() const { return static_cast<Order>(parts_.size()); }
  const std::vector<std::string> &parts() const { return parts_; }
  const std::string &part(std::size_t i) const { return parts_.at(i); }

  // Head object lemma (first part) for every order.
  const std::string &object() const { return parts_.front(); }

  bool Mentions(std::string_view lemma) const {
    for (const auto &p : parts_) {
      if (p == lemma) return true;
    }
    return false;
  }

  // Canonical text form: <a>, <a, b>, <a, b, c>.
  std::string Canonical() const {
    std::string out = "<";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ", ";
      out += parts_[i];
    }
    out += ">";
    return out;
  }

  // Inverse of Canonical(). Returns nullopt for text that is not a canonical
  // premise.
  static std::optional<Premise> Parse(std::string_view text) {
    if (text.size() < 3 || text.front() != '<' || text.back() != '>') return std::nullopt;
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<std::string> parts;
    while (true) {
      std::size_t sep = body.find(", ");
      std::string_view piece = body.substr(0, sep);
      if (piece.empty()) return std::nullopt;
      parts.emplace_back(piece);
      if (sep == std::string_view::npos) break;
      body.remove_prefix(sep + 2);
    }
    if (parts.size() > 3) return std::nullopt;
    for (const auto &p : parts) {
      if (!IsValidPart(p)) return std::nullopt;
    }
    Premise out;
    out.parts_ = std::move(parts);
    return out;
  }

  friend bool operator==(const Premise &, const Premise &) = default;
  friend auto operator<=>(const Premise &, const Premise &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Premise &p) {
    return os << p.Canonical();
  }

 private:
  static bool IsValidPart(std::string_view part) {
    if (part.empty() || part.front() == ' ' || part.back() == ' ') return false;
    for (char c : part) {
      if (c == ',' || c == '<' || c == '>') return false;
      if (c >= 'A' && c <= 'Z') return false;
    }
    return true;
  }

  void Validate() const {
    if (parts_.empty() || parts_.size() > 3) throw InvalidArgument("bad premise arity");
    for (const auto &p : parts_) {
      if (!IsValidPart(p)) throw InvalidArgument("bad premise part '" + p + "'");
    }
  }

  std::vector<std::string> parts_;
};

inline std::string JoinCanonical(const std::vector<Premise> &premises) {
  std::string out;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (i > 0) out += " ";
    out += premises[i].Canonical();
  }
  return out;
}

}  // namespace pforge

template <>
struct std::hash<pforge::Premise> {
  std::size_t operator()(const pforge::Premise &p) const noexcept {
    return std::hash<std::string>{}(p.Canonical());
  }
};

#endif  // PREMISE_FORGE_PREMISE_HPP
