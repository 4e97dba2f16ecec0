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

#ifndef PREMISE_FORGE_IO_HPP
#define PREMISE_FORGE_IO_HPP

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "premise_forge/augmentation.hpp"
#include "premise_forge/error.hpp"
#include "premise_forge/explanation.hpp"
#include "premise_forge/lexicon.hpp"
#include "premise_forge/nn.hpp"
#include "premise_forge/premise.hpp"
#include "premise_forge/qgen.hpp"
#include "premise_forge/qrpe.hpp"
#include "premise_forge/question.hpp"

namespace pforge {

// Insertion-ordered, so records serialize with a stable key order.
using Json = nlohmann::ordered_json;

namespace io {

// Calls fn(line_no, record) for every non-blank line of a JSONL text.
template <typename Fn>
void ForEachRecord(std::string_view text, const std::string &source, Fn &&fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    Json rec;
    try {
      rec = Json::parse(line);
    } catch (const Json::parse_error &e) {
      throw DataError(source, line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!rec.is_object()) throw DataError(source, line_no, "record must be a JSON object");
    try {
      fn(line_no, rec);
    } catch (const Json::exception &e) {
      throw DataError(source, line_no, e.what());
    } catch (const InvalidArgument &e) {
      throw DataError(source, line_no, e.what());
    }
  }
}

inline std::string ToJsonl(const std::vector<Json> &records) {
  std::string out;
  for (const auto &r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

// Writes to `path`, or to stdout when path is empty or "-".
inline void WriteText(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write '" + path + "'");
  os << text;
}

inline std::int64_t RequireInt(const Json &rec, const char *key, const std::string &source, std::size_t line) {
  auto it = rec.find(key);
  if (it == rec.end() || !it->is_number_integer()) {
    throw DataError(source, line, std::string("missing integer \"") + key + "\"");
  }
  return it->get<std::int64_t>();
}

inline std::int64_t RequireId(const Json &rec, const char *key, const std::string &source, std::size_t line) {
  const auto v = RequireInt(rec, key, source, line);
  if (v < 0) throw DataError(source, line, std::string("\"") + key + "\" must be non-negative");
  return v;
}

inline std::string RequireString(const Json &rec, const char *key, const std::string &source, std::size_t line) {
  auto it = rec.find(key);
  if (it == rec.end() || !it->is_string()) {
    throw DataError(source, line, std::string("missing string \"") + key + "\"");
  }
  return it->get<std::string>();
}

inline std::optional<std::string> OptionalString(const Json &rec, const char *key, const std::string &source,
                                                 std::size_t line) {
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw DataError(source, line, std::string("\"") + key + "\" must be a string");
  return it->get<std::string>();
}

inline Premise RequirePremise(const Json &rec, const char *key, const std::string &source, std::size_t line) {
  const std::string text = RequireString(rec, key, source, line);
  auto p = Premise::Parse(text);
  if (!p) throw DataError(source, line, "bad premise '" + text + "'");
  return *p;
}

}  // namespace io

// ---- questions ----

inline Json QuestionToJson(const Question &q) {
  Json j;
  j["question_id"] = q.question_id;
  j["image_id"] = q.image_id;
  j["text"] = q.text;
  if (q.answer) j["answer"] = *q.answer;
  if (q.split) j["split"] = *q.split;
  return j;
}

inline Question QuestionFromJson(const Json &j, const std::string &source, std::size_t line) {
  Question q;
  q.question_id = io::RequireId(j, "question_id", source, line);
  q.image_id = io::RequireId(j, "image_id", source, line);
  q.text = io::RequireString(j, "text", source, line);
  if (Trim(q.text).empty()) throw DataError(source, line, "empty question text");
  q.answer = io::OptionalString(j, "answer", source, line);
  q.split = io::OptionalString(j, "split", source, line);
  return q;
}

inline std::vector<Question> ParseQuestions(std::string_view text, const std::string &source = "<questions>") {
  std::vector<Question> out;
  io::ForEachRecord(text, source, [&](std::size_t line, const Json &j) { out.push_back(QuestionFromJson(j, source, line)); });
  return out;
}

inline std::vector<Question> ReadQuestions(const std::string &path) {
  return ParseQuestions(detail::ReadFile(path), path);
}

inline void WriteQuestions(const std::string &path, const std::vector<Question> &qs) {
  std::vector<Json> recs;
  for (const auto &q : qs) recs.push_back(QuestionToJson(q));
  io::WriteText(path, io::ToJsonl(recs));
}

// ---- merged training sets ----

inline Json TrainingEntryToJson(const TrainingEntry &e) {
  Json j = QuestionToJson(e.question);
  if (e.provenance) {
    Json p;
    p["source_question_id"] = e.provenance->source_question_id;
    p["premise"] = e.provenance->premise.Canonical();
    j["provenance"] = p;
  }
  return j;
}

inline std::vector<TrainingEntry> ParseTrainingSet(std::string_view text, const std::string &source = "<training>") {
  std::vector<TrainingEntry> out;
  io::ForEachRecord(text, source, [&](std::size_t line, const Json &j) {
    TrainingEntry e{QuestionFromJson(j, source, line), std::nullopt};
    if (auto it = j.find("provenance"); it != j.end() && !it->is_null()) {
      if (!it->is_object()) throw DataError(source, line, "\"provenance\" must be an object");
      e.provenance = Provenance{io::RequireId(*it, "source_question_id", source, line),
                                io::RequirePremise(*it, "premise", source, line)};
    }
    out.push_back(std::move(e));
  });
  return out;
}

// ---- premises ----

inline Json PremiseRecordToJson(const Question &q, const std::vector<Premise> &premises) {
  Json j;
  j["question_id"] = q.question_id;
  j["image_id"] = q.image_id;
  Json arr = Json::array();
  for (const auto &p : premises) arr.push_back(p.Canonical());
  j["premises"] = arr;
  return j;
}

// ---- QA pairs ----

inline Json QAPairToJson(const QAPair &qa) {
  Json j;
  j["question"] = qa.question;
  j["answer"] = qa.answer;
  j["answer_type"] = std::string(AnswerTypeName(qa.answer_type));
  j["premise"] = qa.source_premise.Canonical();
  j["source_question_id"] = qa.source_question_id;
  j["image_id"] = qa.image_id;
  return j;
}

inline std::vector<QAPair> ParseQAPairs(std::string_view text, const std::string &source = "<qa pairs>") {
  std::vector<QAPair> out;
  io::ForEachRecord(text, source, [&](std::size_t line, const Json &j) {
    QAPair qa;
    qa.question = io::RequireString(j, "question", source, line);
    qa.answer = io::RequireString(j, "answer", source, line);
    const std::string type = io::RequireString(j, "answer_type", source, line);
    auto t = ParseAnswerType(type);
    if (!t) throw DataError(source, line, "unknown answer type '" + type + "'");
    qa.answer_type = *t;
    qa.source_premise = io::RequirePremise(j, "premise", source, line);
    qa.source_question_id = io::RequireId(j, "source_question_id", source, line);
    qa.image_id = io::RequireId(j, "image_id", source, line);
    out.push_back(std::move(qa));
  });
  return out;
}

inline std::vector<QAPair> ReadQAPairs(const std::string &path) { return ParseQAPairs(detail::ReadFile(path), path); }

inline void WriteQAPairs(const std::string &path, const std::vector<QAPair> &pairs) {
  std::vector<Json> recs;
  for (const auto &qa : pairs) recs.push_back(QAPairToJson(qa));
  io::WriteText(path, io::ToJsonl(recs));
}

// ---- QRPE tuples ----

inline Json TupleToJson(const QrpeTuple &t) {
  Json j;
  j["pos_image"] = t.pos_image;
  j["question_id"] = t.question_id;
  j["premise"] = t.premise.Canonical();
  j["neg_image"] = t.neg_image;
  j["distance"] = t.distance;
  if (t.split) j["split"] = *t.split;
  return j;
}

inline std::vector<QrpeTuple> ParseTuples(std::string_view text, const std::string &source = "<tuples>") {
  std::vector<QrpeTuple> out;
  io::ForEachRecord(text, source, [&](std::size_t line, const Json &j) {
    QrpeTuple t;
    t.pos_image = io::RequireId(j, "pos_image", source, line);
    t.question_id = io::RequireId(j, "question_id", source, line);
    t.premise = io::RequirePremise(j, "premise", source, line);
    t.neg_image = io::RequireId(j, "neg_image", source, line);
    auto d = j.find("distance");
    if (d == j.end() || !d->is_number()) throw DataError(source, line, "missing number \"distance\"");
    t.distance = d->get<double>();
    t.split = io::OptionalString(j, "split", source, line);
    out.push_back(std::move(t));
  });
  return out;
}

inline std::vector<QrpeTuple> ReadTuples(const std::string &path) { return ParseTuples(detail::ReadFile(path), path); }

inline std::string TuplesToJsonl(const std::vector<QrpeTuple> &tuples) {
  std::vector<Json> recs;
  for (const auto &t : tuples) recs.push_back(TupleToJson(t));
  return io::ToJsonl(recs);
}

// ---- relevance datasets ----

inline Json RecordToJson(const RelevanceRecord &r) {
  Json j;
  j["question_id"] = r.question_id;
  j["image_id"] = r.image_id;
  j["label"] = r.label;
  j["falsified_order"] = r.falsified_order ? Json(*r.falsified_order) : Json(nullptr);
  if (r.premise) j["premise"] = r.premise->Canonical();
  if (r.caption) j["caption"] = *r.caption;
  return j;
}

inline std::vector<RelevanceRecord> ParseRecords(std::string_view text, const std::string &source = "<dataset>") {
  std::vector<RelevanceRecord> out;
  io::ForEachRecord(text, source, [&](std::size_t line, const Json &j) {
    RelevanceRecord r;
    r.question_id = io::RequireId(j, "question_id", source, line);
    r.image_id = io::RequireId(j, "image_id", source, line);
    const auto label = io::RequireInt(j, "label", source, line);
    if (label != 0 && label != 1) throw DataError(source, line, "\"label\" must be 0 or 1");
    r.label = static_cast<int>(label);
    if (auto it = j.find("falsified_order"); it != j.end() && !it->is_null()) {
      if (!it->is_number_integer() || (it->get<int>() != 1 && it->get<int>() != 2)) {
        throw DataError(source, line, "\"falsified_order\" must be 1, 2 or null");
      }
      r.falsified_order = it->get<int>();
    }
    if (j.contains("premise") && !j["premise"].is_null()) r.premise = io::RequirePremise(j, "premise", source, line);
    r.caption = io::OptionalString(j, "caption", source, line);
    out.push_back(std::move(r));
  });
  return out;
}

inline std::vector<RelevanceRecord> ReadRecords(const std::string &path) {
  return ParseRecords(detail::ReadFile(path), path);
}

inline std::string RecordsToJsonl(const std::vector<RelevanceRecord> &records) {
  std::vector<Json> recs;
  for (const auto &r : records) recs.push_back(RecordToJson(r));
  return io::ToJsonl(recs);
}

// ---- captions: {"image_id", "caption"} ----

inline std::map<ImageId, std::string> ReadCaptions(const std::string &path) {
  std::map<ImageId, std::string> out;
  io::ForEachRecord(detail::ReadFile(path), path, [&](std::size_t line, const Json &j) {
    out[io::RequireId(j, "image_id", path, line)] = io::RequireString(j, "caption", path, line);
  });
  return out;
}

// ---- explanations ----

inline Json ExplanationToJson(const Explanation &e) {
  Json j;
  j["premise"] = e.premise.Canonical();
  j["sentence"] = e.sentence;
  return j;
}

// ---- model sidecar ----

// Everything needed besides the weights to run a saved model. The embedding
// table itself is not stored; mean-embedding specs need it supplied again.
inline Json SpecToJson(ModelKind kind, const EncodingSpec &spec) {
  Json j;
  j["kind"] = std::string(ModelKindName(kind));
  j["question_mode"] = std::string(TextModeName(spec.question_mode));
  j["question_vocab"] = spec.question_vocab;
  j["premise_vocab_1"] = spec.premise_vocab_1;
  Json pairs = Json::array();
  for (const auto &[o, a] : spec.premise_vocab_2) pairs.push_back(Json::array({o, a}));
  j["premise_vocab_2"] = pairs;
  j["image_dim"] = spec.image_dim;
  j["caption_mode"] = spec.caption_mode ? Json(std::string(TextModeName(*spec.caption_mode))) : Json(nullptr);
  j["caption_vocab"] = spec.caption_vocab;
  j["embedding_dim"] = spec.embeddings ? spec.embeddings->dim() : 0;
  return j;
}

inline std::pair<ModelKind, EncodingSpec> SpecFromJson(const Json &j, const std::string &source) {
  try {
    auto kind = ParseModelKind(j.at("kind").get<std::string>());
    if (!kind) throw DataError(source + ": unknown model kind");
    EncodingSpec spec;
    auto qm = ParseTextMode(j.at("question_mode").get<std::string>());
    if (!qm) throw DataError(source + ": unknown question mode");
    spec.question_mode = *qm;
    spec.question_vocab = j.at("question_vocab").get<std::vector<std::string>>();
    spec.premise_vocab_1 = j.at("premise_vocab_1").get<std::vector<std::string>>();
    for (const auto &pair : j.at("premise_vocab_2")) {
      spec.premise_vocab_2.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    }
    spec.image_dim = j.at("image_dim").get<std::size_t>();
    if (!j.at("caption_mode").is_null()) {
      auto cm = ParseTextMode(j.at("caption_mode").get<std::string>());
      if (!cm) throw DataError(source + ": unknown caption mode");
      spec.caption_mode = *cm;
    }
    spec.caption_vocab = j.at("caption_vocab").get<std::vector<std::string>>();
    return {*kind, std::move(spec)};
  } catch (const Json::exception &e) {
    throw DataError(source + ": " + e.what());
  }
}

inline void WriteSpecFile(const std::string &path, ModelKind kind, const EncodingSpec &spec) {
  io::WriteText(path, SpecToJson(kind, spec).dump(2) + "\n");
}

inline std::pair<ModelKind, EncodingSpec> ReadSpecFile(const std::string &path) {
  const std::string text = detail::ReadFile(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw DataError(path + ": malformed JSON: " + e.what());
  }
  return SpecFromJson(j, path);
}

// ---- config ----

// `key = value` lines; '#' starts a comment line. Later keys win.
class Config {
 public:
  static Config FromText(std::string_view text, const std::string &source = "<config>") {
    Config c;
    detail::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw DataError(source, line_no, "expected key = value");
      const std::string key(Trim(line.substr(0, eq)));
      if (key.empty()) throw DataError(source, line_no, "empty key");
      c.values_[key] = std::string(Trim(line.substr(eq + 1)));
    });
    return c;
  }

  static Config FromFile(const std::string &path) { return FromText(detail::ReadFile(path), path); }

  std::optional<std::string> Get(const std::string &key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void Set(const std::string &key, std::string value) { values_[key] = std::move(value); }

  const std::map<std::string, std::string> &values() const { return values_; }

  // Keys naming input files; each must exist.
  static constexpr std::string_view kPathKeys[] = {"objects",  "attributes", "lexicon",  "aliases",
                                                   "features", "embeddings", "captions", "questions"};

  void Validate() const {
    for (auto key : kPathKeys) {
      auto v = Get(std::string(key));
      if (v && !v->empty() && !std::filesystem::exists(*v)) {
        throw DataError("config: " + std::string(key) + " file '" + *v + "' does not exist");
      }
    }
  }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace pforge

#endif  // PREMISE_FORGE_IO_HPP
