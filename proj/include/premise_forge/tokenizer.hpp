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

#ifndef PREMISE_FORGE_TOKENIZER_HPP
#define PREMISE_FORGE_TOKENIZER_HPP

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "premise_forge/error.hpp"
#include "premise_forge/lexicon.hpp"

namespace pforge {

struct Token {
  std::string surface;
  std::string lemma;
  Tag tag = Tag::Other;

  friend bool operator==(const Token &, const Token &) = default;
};

namespace detail {

inline bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '\'';
}

inline bool IsNumber(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.' && c != ',') return false;
  }
  return std::isdigit(static_cast<unsigned char>(w.front()));
}

inline bool IsClosedClass(Tag t) {
  return t == Tag::Det || t == Tag::Wh || t == Tag::Prep || t == Tag::Other || t == Tag::Num;
}

// Plurals the suffix rules cannot undo.
inline const std::pair<std::string_view, std::string_view> *FindIrregular(std::string_view w) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 9> kIrregular = {{
      {"men", "man"},
      {"women", "woman"},
      {"children", "child"},
      {"feet", "foot"},
      {"teeth", "tooth"},
      {"mice", "mouse"},
      {"geese", "goose"},
      {"oxen", "ox"},
      {"knives", "knife"},
  }};
  for (const auto &entry : kIrregular) {
    if (entry.first == w) return &entry;
  }
  return nullptr;
}

// Lemma and tag for one lowercase word. Verb inflections are recognised for
// tagging but kept verbatim as the lemma ("holding" stays "holding").
inline Token TagWord(std::string surface, const TagLexicon &lexicon) {
  const std::string w = ToLower(surface);
  Token tok{std::move(surface), w, Tag::Noun};

  if (const auto *irr = FindIrregular(w)) {
    tok.lemma = std::string(irr->second);
    tok.tag = Tag::Noun;
    return tok;
  }
  if (auto tag = lexicon.Lookup(w)) {
    tok.tag = *tag;
    return tok;
  }
  if (IsNumber(w)) {
    tok.tag = Tag::Num;
    return tok;
  }

  // Plural / third-person suffixes, checked against the lexicon.
  auto try_stem = [&](std::string stem) -> bool {
    auto tag = lexicon.Lookup(stem);
    if (!tag || IsClosedClass(*tag)) return false;
    tok.tag = *tag;
    if (*tag != Tag::Verb) tok.lemma = std::move(stem);
    return true;
  };
  if (w.size() > 3 && EndsWith(w, "ies") && try_stem(w.substr(0, w.size() - 3) + "y")) return tok;
  if (w.size() > 3 && EndsWith(w, "ves") &&
      (try_stem(w.substr(0, w.size() - 3) + "f") || try_stem(w.substr(0, w.size() - 3) + "fe"))) {
    return tok;
  }
  if (w.size() > 2 && EndsWith(w, "s") && try_stem(w.substr(0, w.size() - 1))) return tok;
  if (w.size() > 3 && EndsWith(w, "es") && try_stem(w.substr(0, w.size() - 2))) return tok;

  if (w.size() > 4 && (EndsWith(w, "ing") || EndsWith(w, "ed"))) {
    tok.tag = Tag::Verb;
    return tok;
  }
  if (w.size() > 4 && EndsWith(w, "ly")) {
    tok.tag = Tag::Other;
    return tok;
  }
  if (w.size() > 3 && EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "is")) {
    tok.lemma = w.substr(0, w.size() - 1);
    tok.tag = Tag::Noun;
    return tok;
  }
  tok.tag = Tag::Noun;
  return tok;
}

inline bool IsContractionHost(std::string_view w) {
  static constexpr std::string_view kHosts[] = {"what", "where", "who", "how", "there", "here",
                                                "it",   "that",  "this", "which", "when", "why"};
  for (auto h : kHosts) {
    if (h == w) return true;
  }
  return false;
}

}  // namespace detail

// Splits a question into words, drops punctuation, splits off possessive
// and contracted 's, and tags each word from the lexicon with suffix-rule
// fallback. Throws InvalidArgument("empty question") for blank input.
inline std::vector<Token> TokenizeAndTag(std::string_view text, const TagLexicon &lexicon) {
  std::string normalized;
  normalized.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2019 RIGHT SINGLE QUOTATION MARK -> ASCII apostrophe.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        static_cast<unsigned char>(text[i + 2]) == 0x99) {
      normalized += '\'';
      i += 2;
      continue;
    }
    normalized += text[i];
  }

  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < normalized.size()) {
    if (!detail::IsWordChar(normalized[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < normalized.size() && detail::IsWordChar(normalized[j])) ++j;
    std::string_view word(normalized.data() + i, j - i);
    if (word == "'s" || word == "'S") {
      words.emplace_back(word);
      i = j;
      continue;
    }
    // Strip quote characters that are not part of the word.
    while (!word.empty() && (word.front() == '\'' || word.front() == '-')) word.remove_prefix(1);
    while (!word.empty() && word.back() == '-') word.remove_suffix(1);
    if (!word.empty()) words.emplace_back(word);
    i = j;
  }
  if (words.empty()) throw InvalidArgument("empty question");

  std::vector<Token> tokens;
  for (const std::string &raw : words) {
    const std::string lower = ToLower(raw);
    if (lower == "'s") {
      bool contraction = !tokens.empty() && detail::IsContractionHost(tokens.back().lemma);
      tokens.push_back(contraction ? Token{raw, "is", Tag::Verb} : Token{raw, "'s", Tag::Poss});
      continue;
    }
    if (detail::EndsWith(lower, "n't") && lower.size() > 3) {
      std::string host = raw.substr(0, raw.size() - 3);
      std::string host_lower = ToLower(host);
      if (host_lower == "ca") host = "can";
      if (host_lower == "wo") host = "will";
      tokens.push_back(detail::TagWord(host, lexicon));
      tokens.push_back(Token{raw.substr(raw.size() - 3), "not", Tag::Other});
      continue;
    }
    if (detail::EndsWith(lower, "'s") && lower.size() > 2) {
      std::string host = raw.substr(0, raw.size() - 2);
      std::string suffix = raw.substr(raw.size() - 2);
      if (detail::IsContractionHost(ToLower(host))) {
        tokens.push_back(detail::TagWord(host, lexicon));
        tokens.push_back(Token{suffix, "is", Tag::Verb});
      } else {
        tokens.push_back(detail::TagWord(host, lexicon));
        tokens.push_back(Token{suffix, "'s", Tag::Poss});
      }
      continue;
    }
    if (lower.size() > 1 && lower.back() == '\'') {
      // Plural possessive: "dogs'".
      tokens.push_back(detail::TagWord(raw.substr(0, raw.size() - 1), lexicon));
      tokens.push_back(Token{"'", "'s", Tag::Poss});
      continue;
    }
    tokens.push_back(detail::TagWord(raw, lexicon));
  }
  return tokens;
}

}  // namespace pforge

#endif  // PREMISE_FORGE_TOKENIZER_HPP
