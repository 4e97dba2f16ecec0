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

#ifndef PREMISE_FORGE_LEXICON_HPP
#define PREMISE_FORGE_LEXICON_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "premise_forge/bundled_data.hpp"
#include "premise_forge/error.hpp"

namespace pforge {

enum class Tag { Noun, Adj, Verb, Prep, Det, Wh, Num, Poss, Other };

inline std::string_view TagName(Tag tag) {
  switch (tag) {
    case Tag::Noun: return "Noun";
    case Tag::Adj: return "Adj";
    case Tag::Verb: return "Verb";
    case Tag::Prep: return "Prep";
    case Tag::Det: return "Det";
    case Tag::Wh: return "Wh";
    case Tag::Num: return "Num";
    case Tag::Poss: return "Poss";
    case Tag::Other: return "Other";
  }
  return "Other";
}

inline std::optional<Tag> ParseTag(std::string_view name) {
  static constexpr Tag kAll[] = {Tag::Noun, Tag::Adj, Tag::Verb, Tag::Prep, Tag::Det,
                                 Tag::Wh,   Tag::Num, Tag::Poss, Tag::Other};
  for (Tag t : kAll) {
    if (TagName(t) == name) return t;
  }
  return std::nullopt;
}

inline std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

namespace detail {

// Calls fn(line_number, trimmed_line) for each non-blank, non-comment line.
template <typename Fn>
void ForEachLine(std::string_view text, Fn &&fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    ++line_no;
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
}

inline std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// Lemma -> part-of-speech lookup table. Text format: one `lemma<TAB>tag`
// per line; '#' starts a comment line.
class TagLexicon {
 public:
  TagLexicon() = default;

  static TagLexicon FromText(std::string_view text, const std::string &source = "<lexicon>") {
    TagLexicon lex;
    detail::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
      std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos) throw DataError(source, line_no, "expected lemma<TAB>tag");
      std::string lemma = ToLower(Trim(line.substr(0, tab)));
      auto tag = ParseTag(Trim(line.substr(tab + 1)));
      if (lemma.empty() || !tag) throw DataError(source, line_no, "bad lexicon entry");
      lex.tags_[lemma] = *tag;
    });
    return lex;
  }

  static TagLexicon FromFile(const std::string &path) {
    return FromText(detail::ReadFile(path), path);
  }

  static const TagLexicon &Bundled() {
    static const TagLexicon lex = FromText(bundled::kLexiconTsv, "<bundled lexicon>");
    return lex;
  }

  std::optional<Tag> Lookup(std::string_view lemma) const {
    auto it = tags_.find(std::string(lemma));
    if (it == tags_.end()) return std::nullopt;
    return it->second;
  }

  bool Has(std::string_view lemma, Tag tag) const {
    auto t = Lookup(lemma);
    return t && *t == tag;
  }

  void Set(std::string lemma, Tag tag) { tags_[std::move(lemma)] = tag; }
  std::size_t size() const { return tags_.size(); }

 private:
  std::unordered_map<std::string, Tag> tags_;
};

// A set of lemmas loaded from a one-per-line file.
class LemmaSet {
 public:
  LemmaSet() = default;
  LemmaSet(std::initializer_list<std::string> items) {
    for (const auto &s : items) items_.insert(ToLower(s));
  }

  static LemmaSet FromText(std::string_view text) {
    LemmaSet set;
    detail::ForEachLine(text, [&](std::size_t, std::string_view line) {
      set.items_.insert(ToLower(line));
    });
    return set;
  }

  static LemmaSet FromFile(const std::string &path) { return FromText(detail::ReadFile(path)); }

  bool Contains(std::string_view lemma) const { return items_.count(std::string(lemma)) > 0; }
  void Insert(std::string lemma) { items_.insert(std::move(lemma)); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  std::vector<std::string> Sorted() const {
    std::vector<std::string> out(items_.begin(), items_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::unordered_set<std::string> items_;
};

// Everything the question parser and template generator read. Immutable
// after construction, so a single instance can be shared across threads.
struct LanguageResources {
  TagLexicon lexicon;
  LemmaSet stoplist;
  LemmaSet abstraction_nouns;
  LemmaSet colors;
  LemmaSet animate;

  static const LanguageResources &Bundled() {
    static const LanguageResources res = [] {
      LanguageResources r;
      r.lexicon = TagLexicon::Bundled();
      r.stoplist = LemmaSet::FromText(bundled::kStoplist);
      r.abstraction_nouns = LemmaSet::FromText(bundled::kAbstractionNouns);
      r.colors = LemmaSet::FromText(bundled::kColorTerms);
      r.animate = LemmaSet::FromText(bundled::kAnimateNouns);
      return r;
    }();
    return res;
  }
};

}  // namespace pforge

#endif  // PREMISE_FORGE_LEXICON_HPP
