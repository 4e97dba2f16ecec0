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

#ifndef PREMISE_FORGE_SCENE_GRAPH_HPP
#define PREMISE_FORGE_SCENE_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "premise_forge/lexicon.hpp"
#include "premise_forge/tokenizer.hpp"

namespace pforge {

enum class QuestionClass { Existential, Counting, Other };

inline std::string_view QuestionClassName(QuestionClass c) {
  switch (c) {
    case QuestionClass::Existential: return "existential";
    case QuestionClass::Counting: return "counting";
    case QuestionClass::Other: return "other";
  }
  return "other";
}

// Objects, attribute edges and relation edges parsed from one question.
// Objects are ordered subjects-first: nodes that are the subject of a
// relation come in relation order, the rest follow in token order.
struct SceneGraph {
  struct Object {
    std::string lemma;
    std::size_t token = 0;  // first mention
  };
  struct Attribute {
    std::size_t object = 0;
    std::string lemma;
    std::size_t token = 0;
    // Predicate of a copula-initial yes/no question ("Is the girl moving?");
    // true or false depending on the answer.
    bool answer_dependent = false;
  };
  struct Relation {
    std::size_t subject = 0;
    std::string lemma;
    std::size_t object = 0;
    std::size_t token = 0;
    bool answer_dependent = false;
    bool possessive = false;
  };

  std::vector<Object> objects;
  std::vector<Attribute> attributes;
  std::vector<Relation> relations;

  std::vector<std::string> ObjectLemmas() const {
    std::vector<std::string> out;
    for (const auto &o : objects) out.push_back(o.lemma);
    return out;
  }
};

namespace detail {

inline bool IsCopula(const Token &t) {
  static constexpr std::string_view kCopulas[] = {"is", "are", "was", "were", "am", "be", "been", "being"};
  for (auto c : kCopulas) {
    if (t.lemma == c) return true;
  }
  return false;
}

inline bool IsAuxiliary(const Token &t) {
  if (IsCopula(t)) return true;
  static constexpr std::string_view kAux[] = {"do",   "does",   "did",   "can", "could", "will",
                                              "would", "should", "may", "might", "must",  "shall"};
  for (auto a : kAux) {
    if (t.lemma == a) return true;
  }
  return false;
}

inline bool IsContentVerb(const Token &t) { return t.tag == Tag::Verb && !IsAuxiliary(t); }

inline bool IsParticiple(const Token &t) {
  return t.tag == Tag::Verb && (EndsWith(t.lemma, "ing") || EndsWith(t.lemma, "ed") ||
                                EndsWith(t.lemma, "en"));
}

// Multi-word prepositions recognised before noun-phrase chunking; "front"
// and "top" would otherwise be read as nouns.
struct CompoundPrep {
  std::array<std::string_view, 3> words;
  std::size_t length;
};

inline constexpr CompoundPrep kCompoundPreps[] = {
    {{"in", "front", "of"}, 3}, {{"on", "top", "of"}, 3}, {{"in", "back", "of"}, 3},
    {{"on", "side", "of"}, 3},  {{"next", "to", ""}, 2},  {{"close", "to", ""}, 2},
    {{"out", "of", ""}, 2},     {{"inside", "of", ""}, 2}, {{"on", "top", ""}, 2},
};

}  // namespace detail

// Opens with "is/are/was/were there", "can/do/could you see", or is a
// copula-initial yes/no question whose predicate is a verb ("Is the little
// girl moving?") -> Existential. Opens with "how many/much" -> Counting.
inline QuestionClass ClassifyQuestion(const std::vector<Token> &tokens) {
  if (tokens.empty()) return QuestionClass::Other;
  const auto lemma = [&](std::size_t i) -> std::string_view {
    return i < tokens.size() ? std::string_view(tokens[i].lemma) : std::string_view{};
  };
  if (lemma(0) == "how" && (lemma(1) == "many" || lemma(1) == "much")) return QuestionClass::Counting;
  const bool opens_with_copula = lemma(0) == "is" || lemma(0) == "are" || lemma(0) == "was" ||
                                 lemma(0) == "were";
  if (opens_with_copula && lemma(1) == "there") return QuestionClass::Existential;
  if ((lemma(0) == "can" || lemma(0) == "do" || lemma(0) == "could") && lemma(1) == "you" &&
      lemma(2) == "see") {
    return QuestionClass::Existential;
  }
  if (opens_with_copula) {
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      if (detail::IsContentVerb(tokens[i])) return QuestionClass::Existential;
    }
  }
  return QuestionClass::Other;
}

namespace detail {

// Rule-based shallow parse. Steps:
//   1. mark wh-target abstraction nouns ("what color", "which kind of") and
//      multi-word prepositions;
//   2. chunk noun phrases: (Det)* (Adj|Noun|Num|participle)* Noun, with the
//      trailing noun run as head and earlier modifiers as attributes;
//   3. attach verbs, prepositions, possessives and predicate adjectives.
class ShallowParser {
 public:
  ShallowParser(const std::vector<Token> &tokens, const LanguageResources &res)
      : tokens_(tokens), res_(res), role_(tokens.size(), Role::None),
        prep_len_(tokens.size(), 0), np_of_token_(tokens.size(), -1) {}

  SceneGraph Parse() {
    MarkAbstractions();
    MarkCompoundPreps();
    ChunkNounPhrases();
    AttachVerbs();
    AttachPrepositions();
    AttachPredicateAdjectives();
    return Finish();
  }

 private:
  enum class Role { None, Skip, PrepCont, InNp };

  struct NounPhrase {
    std::size_t begin = 0;
    std::size_t head = 0;
    std::size_t object = 0;
    bool prep_object = false;  // directly governed by a preposition
  };

  bool Active(std::size_t i) const { return role_[i] == Role::None; }

  void MarkAbstractions() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const Token &t = tokens_[i];
      if (t.tag != Tag::Noun || !res_.abstraction_nouns.Contains(t.lemma)) continue;
      // Walk back over determiners and copulas to a wh-word.
      std::size_t j = i;
      bool wh_target = false;
      while (j > 0) {
        const Token &prev = tokens_[j - 1];
        if (prev.tag == Tag::Wh) {
          wh_target = true;
          break;
        }
        if (prev.tag == Tag::Det || IsCopula(prev)) {
          --j;
          continue;
        }
        break;
      }
      if (!wh_target) continue;
      role_[i] = Role::Skip;
      if (i + 1 < tokens_.size() && tokens_[i + 1].lemma == "of") role_[i + 1] = Role::Skip;
    }
  }

  void MarkCompoundPreps() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (!Active(i)) continue;
      for (const auto &cp : kCompoundPreps) {
        if (i + cp.length > tokens_.size()) continue;
        bool match = true;
        for (std::size_t k = 0; k < cp.length; ++k) {
          if (tokens_[i + k].lemma != cp.words[k] || !Active(i + k)) match = false;
        }
        if (!match) continue;
        prep_len_[i] = cp.length;
        for (std::size_t k = 1; k < cp.length; ++k) role_[i + k] = Role::PrepCont;
        break;
      }
      if (prep_len_[i] == 0 && tokens_[i].tag == Tag::Prep) prep_len_[i] = 1;
    }
  }

  std::string PrepLemma(std::size_t i) const {
    std::string out;
    for (std::size_t k = 0; k < prep_len_[i]; ++k) {
      if (k > 0) out += ' ';
      out += tokens_[i + k].lemma;
    }
    return out;
  }

  bool IsPrepAt(std::size_t i) const { return i < tokens_.size() && Active(i) && prep_len_[i] > 0; }

  std::size_t AddObject(const std::string &lemma, std::size_t token) {
    for (std::size_t k = 0; k < graph_.objects.size(); ++k) {
      if (graph_.objects[k].lemma == lemma) return k;
    }
    graph_.objects.push_back({lemma, token});
    return graph_.objects.size() - 1;
  }

  void AddAttribute(std::size_t object, const std::string &lemma, std::size_t token,
                    bool answer_dependent = false) {
    if (lemma == graph_.objects[object].lemma) return;
    for (const auto &a : graph_.attributes) {
      if (a.object == object && a.lemma == lemma) return;
    }
    graph_.attributes.push_back({object, lemma, token, answer_dependent});
  }

  void AddRelation(std::size_t subject, const std::string &lemma, std::size_t object,
                   std::size_t token, bool answer_dependent, bool possessive = false) {
    if (subject == object) return;
    for (const auto &r : graph_.relations) {
      if (r.subject == subject && r.lemma == lemma && r.object == object) return;
    }
    graph_.relations.push_back({subject, lemma, object, token, answer_dependent, possessive});
  }

  bool IsModifier(std::size_t i) const {
    if (!Active(i)) return false;
    const Token &t = tokens_[i];
    return t.tag == Tag::Adj || t.tag == Tag::Noun || t.tag == Tag::Num;
  }

  void ChunkNounPhrases() {
    std::size_t i = 0;
    while (i < tokens_.size()) {
      if (!Active(i) || prep_len_[i] > 0) {
        ++i;
        continue;
      }
      std::size_t j = i;
      bool saw_det = false;
      while (j < tokens_.size() && Active(j) && tokens_[j].tag == Tag::Det) {
        saw_det = true;
        ++j;
      }
      // Modifier run; a participle only counts after a determiner or
      // adjective ("the parked car"), and "and" may join two adjectives.
      std::size_t k = j;
      std::optional<std::size_t> head;
      while (k < tokens_.size()) {
        const Token &t = tokens_[k];
        if (IsModifier(k)) {
          if (t.tag == Tag::Noun) head = k;
          ++k;
          continue;
        }
        bool after_mod = k > j ? tokens_[k - 1].tag == Tag::Adj : saw_det;
        if (after_mod && Active(k) && IsParticiple(t) && k + 1 < tokens_.size() && IsModifier(k + 1)) {
          ++k;
          continue;
        }
        if (k > j && Active(k) && t.lemma == "and" && tokens_[k - 1].tag == Tag::Adj &&
            k + 1 < tokens_.size() && Active(k + 1) && tokens_[k + 1].tag == Tag::Adj) {
          ++k;
          continue;
        }
        break;
      }
      if (!head) {
        i = std::max(k, i + 1);
        continue;
      }
      const std::size_t h = *head;
      // Nouns directly before the head form a compound ("tennis racket").
      std::size_t c = h;
      while (c > j && tokens_[c - 1].tag == Tag::Noun) --c;
      std::string lemma;
      for (std::size_t m = c; m < h; ++m) lemma += tokens_[m].lemma + " ";
      lemma += tokens_[h].lemma;
      NounPhrase np;
      np.begin = i;
      np.head = h;
      np.object = AddObject(lemma, h);
      np.prep_object = i > 0 && IsPrepBefore(i);
      for (std::size_t m = j; m < h; ++m) {
        const Token &t = tokens_[m];
        role_[m] = Role::InNp;
        if (m >= c) continue;
        if (t.tag == Tag::Adj || t.tag == Tag::Noun || t.tag == Tag::Verb) {
          AddAttribute(np.object, t.lemma, m);
        }
      }
      for (std::size_t m = i; m < j; ++m) role_[m] = Role::InNp;
      role_[h] = Role::InNp;
      for (std::size_t m = i; m <= h; ++m) np_of_token_[m] = static_cast<int>(nps_.size());
      nps_.push_back(np);
      i = h + 1;
    }
    // Possessives: NP 's NP -> has relation.
    for (std::size_t n = 0; n + 1 < nps_.size(); ++n) {
      const std::size_t after = nps_[n].head + 1;
      if (after < tokens_.size() && tokens_[after].tag == Tag::Poss && nps_[n + 1].begin == after + 1) {
        AddRelation(nps_[n].object, "has", nps_[n + 1].object, after, false, true);
      }
    }
  }

  bool IsPrepBefore(std::size_t begin) const {
    // The token before `begin`, skipping compound-preposition continuations.
    std::size_t p = begin;
    while (p > 0) {
      --p;
      if (role_[p] == Role::PrepCont) continue;
      return IsPrepAt(p);
    }
    return false;
  }

  // NP whose head precedes `pos`, preferring ones not inside a
  // prepositional phrase.
  std::optional<std::size_t> SubjectBefore(std::size_t pos) const {
    std::optional<std::size_t> fallback;
    for (std::size_t n = nps_.size(); n-- > 0;) {
      if (nps_[n].head >= pos) continue;
      if (!nps_[n].prep_object) return n;
      if (!fallback) fallback = n;
    }
    return fallback;
  }

  std::optional<std::size_t> NpStartingAt(std::size_t pos) const {
    for (std::size_t n = 0; n < nps_.size(); ++n) {
      if (nps_[n].begin == pos) return n;
    }
    return std::nullopt;
  }

  bool CopulaInitial() const {
    return !tokens_.empty() && IsCopula(tokens_[0]);
  }

  bool BareWhOpening() const {
    if (tokens_.empty() || tokens_[0].tag != Tag::Wh) return false;
    const std::string &w = tokens_[0].lemma;
    if (w != "what" && w != "who" && w != "whom" && w != "which") return false;
    // "what brand of racket": the wh-word heads a noun phrase, not a gap.
    return !(tokens_.size() > 1 && np_of_token_[1] >= 0);
  }

  // Noun phrase fronted by a wh-word ("What brand of racket is ..."): the
  // first NP, when the question opens with a wh-word and the NP precedes
  // the subject.
  std::optional<std::size_t> FrontedObject(std::size_t subject_np) const {
    if (tokens_.empty() || tokens_[0].tag != Tag::Wh || nps_.empty()) return std::nullopt;
    if (subject_np == 0 || nps_[0].prep_object) return std::nullopt;
    // Nothing but skipped abstraction tokens between the wh-word and the NP.
    for (std::size_t t = 1; t < nps_[0].begin; ++t) {
      if (role_[t] != Role::Skip) return std::nullopt;
    }
    return 0;
  }

  std::size_t NextActive(std::size_t pos) const {
    while (pos < tokens_.size() && (role_[pos] == Role::PrepCont || tokens_[pos].tag == Tag::Other)) {
      ++pos;
    }
    return pos;
  }

  void AttachVerbs() {
    const bool yes_no = CopulaInitial();
    for (std::size_t v = 0; v < tokens_.size(); ++v) {
      if (!Active(v) || !IsContentVerb(tokens_[v])) continue;
      auto subj = SubjectBefore(v);
      std::size_t next = NextActive(v + 1);

      if (IsPrepAt(next)) {
        std::size_t after = next + prep_len_[next];
        if (auto obj = NpStartingAt(after); obj && subj) {
          AddRelation(nps_[*subj].object, tokens_[v].lemma + " " + PrepLemma(next),
                      nps_[*obj].object, v, yes_no);
          consumed_preps_.push_back(next);
        } else if (!obj && subj) {
          // Stranded preposition ("What is the child sitting on?"): the
          // verb itself is intransitive here.
          AddAttribute(nps_[*subj].object, tokens_[v].lemma, v, yes_no);
          consumed_preps_.push_back(next);
        }
        continue;
      }
      if (auto obj = NpStartingAt(next)) {
        if (subj) AddRelation(nps_[*subj].object, tokens_[v].lemma, nps_[*obj].object, v, yes_no);
        continue;
      }
      if (!subj) continue;
      if (auto fronted = FrontedObject(*subj)) {
        AddRelation(nps_[*subj].object, tokens_[v].lemma, nps_[*fronted].object, v, yes_no);
        continue;
      }
      // "What is the man holding?": the object is the wh-gap.
      if (BareWhOpening()) continue;
      AddAttribute(nps_[*subj].object, tokens_[v].lemma, v, yes_no);
    }
  }

  void AttachPrepositions() {
    for (std::size_t p = 0; p < tokens_.size(); ++p) {
      if (!IsPrepAt(p)) continue;
      if (std::find(consumed_preps_.begin(), consumed_preps_.end(), p) != consumed_preps_.end()) continue;
      // Left attachment: closest NP before p across copulas and adverbs only.
      std::optional<std::size_t> left;
      for (std::size_t q = p; q > 0;) {
        --q;
        if (np_of_token_[q] >= 0) {
          left = static_cast<std::size_t>(np_of_token_[q]);
          break;
        }
        if (IsCopula(tokens_[q]) || tokens_[q].tag == Tag::Other) continue;
        break;
      }
      auto right = NpStartingAt(p + prep_len_[p]);
      if (!left || !right) continue;
      AddRelation(nps_[*left].object, PrepLemma(p), nps_[*right].object, p, false);
    }
  }

  void AttachPredicateAdjectives() {
    for (std::size_t a = 0; a < tokens_.size(); ++a) {
      if (!Active(a) || tokens_[a].tag != Tag::Adj || prep_len_[a] > 1) continue;  // "next to"
      // "How old is ...": the adjective is what is being asked.
      if (a > 0 && tokens_[a - 1].lemma == "how") continue;
      auto subj = SubjectBefore(a);
      if (!subj) continue;
      AddAttribute(nps_[*subj].object, tokens_[a].lemma, a);
    }
  }

  SceneGraph Finish() {
    // Subjects first, in relation order; then by first mention.
    std::stable_sort(graph_.relations.begin(), graph_.relations.end(),
                     [](const auto &x, const auto &y) { return x.token < y.token; });
    const std::size_t n = graph_.objects.size();
    std::vector<std::size_t> rank(n, n + 1);
    std::size_t next_rank = 0;
    for (const auto &r : graph_.relations) {
      if (rank[r.subject] > n) rank[r.subject] = next_rank++;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (rank[a] != rank[b]) return rank[a] < rank[b];
      return graph_.objects[a].token < graph_.objects[b].token;
    });
    std::vector<std::size_t> remap(n);
    SceneGraph out;
    for (std::size_t k = 0; k < n; ++k) {
      remap[order[k]] = k;
      out.objects.push_back(graph_.objects[order[k]]);
    }
    for (auto a : graph_.attributes) {
      a.object = remap[a.object];
      out.attributes.push_back(a);
    }
    std::stable_sort(out.attributes.begin(), out.attributes.end(),
                     [](const auto &x, const auto &y) { return x.token < y.token; });
    for (auto r : graph_.relations) {
      r.subject = remap[r.subject];
      r.object = remap[r.object];
      out.relations.push_back(r);
    }
    return out;
  }

  const std::vector<Token> &tokens_;
  const LanguageResources &res_;
  std::vector<Role> role_;
  std::vector<std::size_t> prep_len_;
  std::vector<int> np_of_token_;
  std::vector<NounPhrase> nps_;
  std::vector<std::size_t> consumed_preps_;
  SceneGraph graph_;
};

}  // namespace detail

inline SceneGraph ParseSceneGraph(const std::vector<Token> &tokens,
                                  const LanguageResources &res = LanguageResources::Bundled()) {
  return detail::ShallowParser(tokens, res).Parse();
}

}  // namespace pforge

#endif  // PREMISE_FORGE_SCENE_GRAPH_HPP
