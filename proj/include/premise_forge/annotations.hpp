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

#ifndef PREMISE_FORGE_ANNOTATIONS_HPP
#define PREMISE_FORGE_ANNOTATIONS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "premise_forge/bundled_data.hpp"
#include "premise_forge/error.hpp"
#include "premise_forge/lexicon.hpp"
#include "premise_forge/premise.hpp"
#include "premise_forge/question.hpp"

namespace pforge {

enum class TruthValue { True, False, Unknown };

inline std::string_view TruthName(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "true";
    case TruthValue::False: return "false";
    case TruthValue::Unknown: return "unknown";
  }
  return "unknown";
}

// Lowercases and collapses internal whitespace.
inline std::string NormalizeLemma(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : Trim(s)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Antonym pairs and taxonomic sister groups. File format, one per line:
//   ANTONYM a b
//   SISTER a b c ...
class ExclusionLexicon {
 public:
  static ExclusionLexicon FromText(std::string_view text, const std::string &source = "<exclusion lexicon>") {
    ExclusionLexicon lex;
    detail::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
      std::vector<std::string> words;
      std::size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        if (end > pos) words.emplace_back(line.substr(pos, end - pos));
        pos = end;
      }
      if (words.empty()) return;
      const std::string kind = words.front();
      words.erase(words.begin());
      for (auto &w : words) w = NormalizeLemma(w);
      if (kind == "ANTONYM") {
        if (words.size() != 2) throw DataError(source, line_no, "ANTONYM takes exactly two lemmas");
        if (words[0] == words[1]) throw DataError(source, line_no, "a lemma cannot be its own antonym");
        lex.AddAntonyms(words[0], words[1]);
      } else if (kind == "SISTER") {
        if (words.size() < 2) throw DataError(source, line_no, "SISTER needs at least two lemmas");
        lex.AddSisterGroup(words);
      } else {
        throw DataError(source, line_no, "unknown record '" + kind + "'");
      }
    });
    return lex;
  }

  static ExclusionLexicon FromFile(const std::string &path) {
    return FromText(detail::ReadFile(path), path);
  }

  static const ExclusionLexicon &Bundled() {
    static const ExclusionLexicon lex = FromText(bundled::kExclusionLexicon, "<bundled exclusion lexicon>");
    return lex;
  }

  void AddAntonyms(const std::string &a, const std::string &b) {
    antonyms_.insert(std::minmax(a, b));
  }

  void AddSisterGroup(const std::vector<std::string> &group) {
    const std::size_t id = sister_groups_.size();
    sister_groups_.emplace_back(group.begin(), group.end());
    for (const auto &w : group) group_of_[w].push_back(id);
  }

  // True iff a and b are distinct and either antonyms or sister terms.
  bool MutuallyExclusive(std::string_view a, std::string_view b) const {
    if (a == b) return false;
    const std::string sa(a), sb(b);
    if (antonyms_.count(std::minmax(sa, sb)) > 0) return true;
    auto ia = group_of_.find(sa);
    auto ib = group_of_.find(sb);
    if (ia == group_of_.end() || ib == group_of_.end()) return false;
    for (std::size_t g : ia->second) {
      for (std::size_t h : ib->second) {
        if (g == h) return true;
      }
    }
    return false;
  }

  std::size_t antonym_count() const { return antonyms_.size(); }
  const std::vector<std::set<std::string>> &sister_groups() const { return sister_groups_; }

 private:
  std::set<std::pair<std::string, std::string>> antonyms_;
  std::vector<std::set<std::string>> sister_groups_;
  std::unordered_map<std::string, std::vector<std::size_t>> group_of_;
};

// Maps question lemmas onto the object class inventory. Format: one
// "alias canonical class" per line; the class may contain spaces.
class ClassAliases {
 public:
  static ClassAliases FromText(std::string_view text, const std::string &source = "<aliases>") {
    ClassAliases aliases;
    detail::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
      std::size_t sp = line.find_first_of(" \t");
      if (sp == std::string_view::npos) throw DataError(source, line_no, "expected 'alias canonical'");
      aliases.map_[NormalizeLemma(line.substr(0, sp))] = NormalizeLemma(line.substr(sp + 1));
    });
    return aliases;
  }

  static ClassAliases FromFile(const std::string &path) { return FromText(detail::ReadFile(path), path); }

  static const ClassAliases &Bundled() {
    static const ClassAliases a = FromText(bundled::kClassAliases, "<bundled aliases>");
    return a;
  }

  std::string Resolve(const std::string &lemma) const {
    auto it = map_.find(lemma);
    return it == map_.end() ? lemma : it->second;
  }

  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

inline std::vector<std::string> BundledClassVocabulary() {
  std::vector<std::string> out;
  detail::ForEachLine(bundled::kCocoClasses, [&](std::size_t, std::string_view line) {
    out.push_back(NormalizeLemma(line));
  });
  return out;
}

// Object-presence and attribute annotations plus the exclusion lexicon.
// Immutable once built; queries are safe from any number of threads.
class AnnotationStore {
 public:
  struct Options {
    std::vector<std::string> class_vocab = BundledClassVocabulary();
    ExclusionLexicon exclusion = ExclusionLexicon::Bundled();
    ClassAliases aliases = ClassAliases::Bundled();
  };

  AnnotationStore() : AnnotationStore(Options{}) {}
  explicit AnnotationStore(Options options)
      : exclusion_(std::move(options.exclusion)), aliases_(std::move(options.aliases)) {
    for (const auto &c : options.class_vocab) ClassIndex(NormalizeLemma(c));
  }

  // Records that `image` was annotated for object presence with `classes`.
  // Aliases resolve to their class; classes outside the vocabulary extend it.
  void AddObjects(ImageId image, const std::vector<std::string> &classes) {
    auto &present = presence_[image];
    for (const auto &c : classes) present.insert(ClassIndex(aliases_.Resolve(NormalizeLemma(c))));
  }

  void AddAttribute(ImageId image, const std::string &object, const std::string &attribute) {
    attributes_[image][NormalizeLemma(object)].insert(NormalizeLemma(attribute));
  }

  // Parses the objects / attributes JSONL files. Empty paths are skipped.
  // Unknown keys are ignored; malformed records raise DataError with the
  // line number.
  void LoadObjectsJsonl(std::string_view text, const std::string &source) {
    ForEachJsonLine(text, source, [&](std::size_t line_no, const nlohmann::json &rec) {
      const ImageId image = RequireImageId(rec, source, line_no);
      auto it = rec.find("classes");
      if (it == rec.end() || !it->is_array()) throw DataError(source, line_no, "missing \"classes\" array");
      std::vector<std::string> classes;
      for (const auto &c : *it) {
        if (!c.is_string()) throw DataError(source, line_no, "class names must be strings");
        classes.push_back(c.get<std::string>());
      }
      AddObjects(image, classes);
    });
  }

  void LoadAttributesJsonl(std::string_view text, const std::string &source) {
    ForEachJsonLine(text, source, [&](std::size_t line_no, const nlohmann::json &rec) {
      const ImageId image = RequireImageId(rec, source, line_no);
      auto it = rec.find("pairs");
      if (it == rec.end() || !it->is_array()) throw DataError(source, line_no, "missing \"pairs\" array");
      attributes_[image];
      for (const auto &pair : *it) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
          throw DataError(source, line_no, "each pair must be [object, attribute]");
        }
        AddAttribute(image, pair[0].get<std::string>(), pair[1].get<std::string>());
      }
    });
  }

  static AnnotationStore Load(const std::string &objects_path, const std::string &attributes_path,
                              const std::string &lexicon_path = "", const std::string &aliases_path = "") {
    Options opts;
    if (!lexicon_path.empty()) opts.exclusion = ExclusionLexicon::FromFile(lexicon_path);
    if (!aliases_path.empty()) opts.aliases = ClassAliases::FromFile(aliases_path);
    AnnotationStore store(std::move(opts));
    if (!objects_path.empty()) store.LoadObjectsJsonl(detail::ReadFile(objects_path), objects_path);
    if (!attributes_path.empty()) {
      store.LoadAttributesJsonl(detail::ReadFile(attributes_path), attributes_path);
    }
    return store;
  }

  // Truth of a first- or second-order premise on one image.
  //   <x>:    True iff the class of x is present; False iff it is a known
  //           class, the image has presence annotations, and it is absent;
  //           Unknown otherwise.
  //   <x, a>: True iff (x, a) is annotated; False iff x carries an annotated
  //           attribute mutually exclusive with a; Unknown otherwise.
  TruthValue PremiseHolds(const Premise &premise, ImageId image) const {
    switch (premise.order()) {
      case Order::First: return ObjectHolds(premise.part(0), image);
      case Order::Second: return AttributeHolds(premise.part(0), premise.part(1), image);
      case Order::Third: break;
    }
    throw InvalidArgument("unsupported premise order");
  }

  TruthValue ObjectHolds(const std::string &lemma, ImageId image) const {
    const std::string cls = aliases_.Resolve(lemma);
    auto idx = class_index_.find(cls);
    if (idx == class_index_.end()) return TruthValue::Unknown;
    auto it = presence_.find(image);
    if (it == presence_.end()) return TruthValue::Unknown;
    return it->second.count(idx->second) > 0 ? TruthValue::True : TruthValue::False;
  }

  TruthValue AttributeHolds(const std::string &object, const std::string &attribute, ImageId image) const {
    auto img = attributes_.find(image);
    if (img == attributes_.end()) return TruthValue::Unknown;
    auto obj = img->second.find(object);
    if (obj == img->second.end()) return TruthValue::Unknown;
    if (obj->second.count(attribute) > 0) return TruthValue::True;
    for (const auto &other : obj->second) {
      if (exclusion_.MutuallyExclusive(attribute, other)) return TruthValue::False;
    }
    return TruthValue::Unknown;
  }

  bool MutuallyExclusive(std::string_view a, std::string_view b) const {
    return exclusion_.MutuallyExclusive(a, b);
  }

  // Class names present on an image (empty when the image has no record).
  std::set<std::string> Presence(ImageId image) const {
    std::set<std::string> out;
    auto it = presence_.find(image);
    if (it == presence_.end()) return out;
    for (std::size_t idx : it->second) out.insert(class_vocab_[idx]);
    return out;
  }

  std::set<std::pair<std::string, std::string>> Pairs(ImageId image) const {
    std::set<std::pair<std::string, std::string>> out;
    auto it = attributes_.find(image);
    if (it == attributes_.end()) return out;
    for (const auto &[obj, attrs] : it->second) {
      for (const auto &a : attrs) out.emplace(obj, a);
    }
    return out;
  }

  // Images with object-presence annotations, ascending.
  std::vector<ImageId> AnnotatedImages() const {
    std::vector<ImageId> out;
    for (const auto &[id, _] : presence_) out.push_back(id);
    return out;
  }

  const std::vector<std::string> &class_vocab() const { return class_vocab_; }
  const ExclusionLexicon &exclusion() const { return exclusion_; }
  const ClassAliases &aliases() const { return aliases_; }
  bool empty() const { return presence_.empty() && attributes_.empty(); }

 private:
  template <typename Fn>
  static void ForEachJsonLine(std::string_view text, const std::string &source, Fn &&fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
      std::size_t nl = text.find('\n');
      std::string_view line = Trim(text.substr(0, nl));
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      ++line_no;
      if (line.empty()) continue;
      nlohmann::json rec;
      try {
        rec = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error &e) {
        throw DataError(source, line_no, std::string("malformed JSON: ") + e.what());
      }
      if (!rec.is_object()) throw DataError(source, line_no, "record must be a JSON object");
      fn(line_no, rec);
    }
  }

  static ImageId RequireImageId(const nlohmann::json &rec, const std::string &source, std::size_t line_no) {
    auto it = rec.find("image_id");
    if (it == rec.end() || !it->is_number_integer()) {
      throw DataError(source, line_no, "missing integer \"image_id\"");
    }
    return it->get<ImageId>();
  }

  std::size_t ClassIndex(const std::string &cls) {
    auto [it, inserted] = class_index_.try_emplace(cls, class_vocab_.size());
    if (inserted) class_vocab_.push_back(cls);
    return it->second;
  }

  std::vector<std::string> class_vocab_;
  std::unordered_map<std::string, std::size_t> class_index_;
  std::map<ImageId, std::set<std::size_t>> presence_;
  std::map<ImageId, std::map<std::string, std::set<std::string>>> attributes_;
  ExclusionLexicon exclusion_;
  ClassAliases aliases_;
};

}  // namespace pforge

#endif  // PREMISE_FORGE_ANNOTATIONS_HPP
