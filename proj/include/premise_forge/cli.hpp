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

#ifndef PREMISE_FORGE_CLI_HPP
#define PREMISE_FORGE_CLI_HPP

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "premise_forge/annotations.hpp"
#include "premise_forge/augmentation.hpp"
#include "premise_forge/explanation.hpp"
#include "premise_forge/extraction.hpp"
#include "premise_forge/features.hpp"
#include "premise_forge/io.hpp"
#include "premise_forge/nn.hpp"
#include "premise_forge/qgen.hpp"
#include "premise_forge/qrpe.hpp"

namespace pforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

inline constexpr const char *kConfigEnv = "PREMISE_FORGE_CONFIG";

struct Options {
  std::string in, out;
  bool strict = false;
  double threshold = kDefaultDedupThreshold;
  std::uint64_t seed = 1;
  std::string features, objects, attributes, lexicon, aliases, embeddings, captions, questions;
  std::string strategy, model, kind = "rel-qp";
  std::string merged, records, stats;
  unsigned threads = 1;
  bool normalize = false;
  // training
  std::string hidden = "64", optimizer = "sgd";
  double lr = 0.1;
  std::size_t epochs = 200, batch = 16;
  // explain / stats
  std::string question;
  std::int64_t image = -1;
  bool jsonl = false;
  std::string answer_types, tuples;
  double bucket = 0.0;
};

namespace detail {

inline void Emit(std::ostream &out, const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write '" + path + "'");
  os << text;
}

inline std::string Require(const std::string &value, const char *flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
  return value;
}

inline std::vector<std::size_t> ParseHidden(const std::string &s) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    const std::size_t comma = s.find(',', pos);
    const std::string piece(Trim(std::string_view(s).substr(pos, comma - pos)));
    char *end = nullptr;
    const unsigned long v = std::strtoul(piece.c_str(), &end, 10);
    if (piece.empty() || *end != '\0' || v == 0) throw InvalidArgument("bad --hidden value '" + s + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Loads the inputs a relevance or FPD model reads for each dataset record.
struct ExampleContext {
  std::map<QuestionId, Question> questions;
  std::optional<FeatureStore> features;
  std::map<ImageId, std::string> captions;
};

inline ExampleContext LoadContext(const Options &o, ModelKind kind) {
  ExampleContext ctx;
  const InputBlocks b = BlocksFor(kind);
  if (b.question || (b.premises && kind != ModelKind::FPD)) {
    for (auto &q : ReadQuestions(Require(o.questions, "--questions"))) ctx.questions[q.question_id] = std::move(q);
  }
  if (b.image) ctx.features = FeatureStore::ReadFile(Require(o.features, "--features"));
  if (!o.captions.empty()) ctx.captions = ReadCaptions(o.captions);
  return ctx;
}

inline std::vector<ModelExample> BuildExamples(ModelKind kind, const std::vector<RelevanceRecord> &records,
                                               const ExampleContext &ctx, const std::string &source) {
  const InputBlocks b = BlocksFor(kind);
  std::vector<ModelExample> out;
  std::size_t n = 0;
  for (const auto &r : records) {
    ++n;
    ModelExample ex;
    ex.label = r.label;
    ex.falsified_order = r.falsified_order;
    const Question *q = nullptr;
    if (!ctx.questions.empty() || b.question) {
      auto it = ctx.questions.find(r.question_id);
      if (it == ctx.questions.end()) {
        throw DataError(source, n, "unknown question id " + std::to_string(r.question_id));
      }
      q = &it->second;
    }
    if (b.question) ex.question_tokens = QuestionWords(q->text);
    if (b.premises) {
      if (kind == ModelKind::FPD) {
        if (!r.premise) throw DataError(source, n, "fpd records need a \"premise\"");
        ex.premises = {*r.premise};
      } else {
        ex.premises = ExtractPremises(q->text, ExtractionMode::NonStrict);
      }
    }
    if (b.caption) {
      if (r.caption) {
        ex.caption_tokens = QuestionWords(*r.caption);
      } else if (auto it = ctx.captions.find(r.image_id); it != ctx.captions.end()) {
        ex.caption_tokens = QuestionWords(it->second);
      } else {
        throw DataError(source, n, "no caption for image " + std::to_string(r.image_id));
      }
    }
    if (b.image) {
      const auto v = ctx.features->Get(r.image_id);
      ex.image.assign(v.begin(), v.end());
    }
    out.push_back(std::move(ex));
  }
  return out;
}

// Vocabularies are the sorted distinct words and premises of the training
// examples.
inline EncodingSpec SpecFromExamples(ModelKind kind, const std::vector<ModelExample> &data,
                                     std::shared_ptr<const EmbeddingTable> embeddings, std::size_t image_dim) {
  EncodingSpec spec;
  spec.embeddings = std::move(embeddings);
  spec.question_mode = spec.embeddings ? TextMode::MeanEmbedding : TextMode::BagOfWords;
  spec.image_dim = BlocksFor(kind).image ? image_dim : 0;
  std::set<std::string> words, captions, first;
  std::set<std::pair<std::string, std::string>> second;
  for (const auto &ex : data) {
    words.insert(ex.question_tokens.begin(), ex.question_tokens.end());
    captions.insert(ex.caption_tokens.begin(), ex.caption_tokens.end());
    for (const auto &p : ex.premises) {
      if (p.order() == Order::Second) {
        second.emplace(p.part(0), p.part(1));
      } else {
        first.insert(p.part(0));
        if (p.order() == Order::Third) first.insert(p.part(2));
      }
    }
  }
  if (!spec.embeddings) spec.question_vocab.assign(words.begin(), words.end());
  if (BlocksFor(kind).caption) {
    spec.caption_mode = spec.question_mode;
    if (!spec.embeddings) spec.caption_vocab.assign(captions.begin(), captions.end());
  }
  if (BlocksFor(kind).premises) {
    spec.premise_vocab_1.assign(first.begin(), first.end());
    spec.premise_vocab_2.assign(second.begin(), second.end());
  }
  return spec;
}

inline std::string SpecPath(const std::string &model_path) { return model_path + ".json"; }

inline std::shared_ptr<const EmbeddingTable> MaybeEmbeddings(const std::string &path) {
  if (path.empty()) return nullptr;
  return std::make_shared<const EmbeddingTable>(EmbeddingTable::FromFile(path));
}

// ---- subcommands ----

inline void RunExtract(const Options &o, std::ostream &out) {
  const auto questions = ReadQuestions(Require(o.in, "--in"));
  const auto mode = o.strict ? ExtractionMode::Strict : ExtractionMode::NonStrict;
  std::vector<Json> recs;
  for (const auto &q : questions) recs.push_back(PremiseRecordToJson(q, ExtractPremises(q, mode)));
  Emit(out, o.out, io::ToJsonl(recs));
}

inline void RunGenerate(const Options &o, std::ostream &out) {
  const auto questions = ReadQuestions(Require(o.in, "--in"));
  std::vector<QAPair> pairs;
  for (const auto &q : questions) {
    auto g = GenerateForQuestion(q, o.threshold);
    pairs.insert(pairs.end(), g.begin(), g.end());
  }
  if (!o.strategy.empty()) {
    auto st = ParseStrategy(o.strategy);
    if (!st) throw InvalidArgument("unknown strategy '" + o.strategy + "'");
    std::vector<std::string> answers;
    for (const auto &q : questions) {
      if (q.answer && (!q.split || *q.split == "train")) answers.push_back(*q.answer);
    }
    pairs = ApplyStrategy(pairs, answers, *st);
  }
  std::vector<Json> recs;
  for (const auto &qa : pairs) recs.push_back(QAPairToJson(qa));
  Emit(out, o.out, io::ToJsonl(recs));
  if (!o.merged.empty()) {
    std::vector<Json> merged;
    for (const auto &e : MergeTrainingSet(questions, pairs)) merged.push_back(TrainingEntryToJson(e));
    Emit(out, o.merged, io::ToJsonl(merged));
  }
}

inline Json StatsToJson(const DatasetStats &s) {
  Json j;
  j["total"] = s.total;
  j["unique_premises"] = s.unique_premises;
  j["unique_questions"] = s.unique_questions;
  j["first_order"] = s.first_order;
  j["second_order"] = s.second_order;
  Json splits = Json::object();
  for (const auto &[k, v] : s.by_split) splits[k] = v;
  j["by_split"] = splits;
  return j;
}

inline void RunBuildQrpe(const Options &o, std::ostream &out, std::ostream &err) {
  const auto questions = ReadQuestions(Require(o.in, "--in"));
  const auto store = AnnotationStore::Load(Require(o.objects, "--objects"), o.attributes, o.lexicon, o.aliases);
  auto features = FeatureStore::ReadFile(Require(o.features, "--features"));
  if (o.normalize) features.NormalizeL2();
  BuildOptions opts;
  opts.threads = o.threads;
  const auto tuples = BuildDataset(questions, store, features, opts);
  Emit(out, o.out, TuplesToJsonl(tuples));
  if (!o.records.empty()) Emit(out, o.records, RecordsToJsonl(BalancedRecords(tuples)));
  const Json stats = StatsToJson(ComputeDatasetStats(tuples));
  if (!o.stats.empty()) {
    Emit(out, o.stats, stats.dump(2) + "\n");
  } else {
    err << stats.dump() << "\n";
  }
}

inline void RunTrain(const Options &o, std::ostream &out, std::ostream &err) {
  auto kind = ParseModelKind(o.kind);
  if (!kind) throw InvalidArgument("unknown model kind '" + o.kind + "'");
  auto optimizer = ParseOptimizer(o.optimizer);
  if (!optimizer) throw InvalidArgument("unknown optimizer '" + o.optimizer + "'");
  const std::string model_path = Require(o.model, "--model");
  const std::string data_path = Require(o.in, "--in");
  const auto records = ReadRecords(data_path);
  const auto ctx = LoadContext(o, *kind);
  const auto data = BuildExamples(*kind, records, ctx, data_path);
  const auto spec =
      SpecFromExamples(*kind, data, MaybeEmbeddings(o.embeddings), ctx.features ? ctx.features->dim() : 0);
  TrainOptions t;
  t.hidden = ParseHidden(o.hidden);
  t.lr = o.lr;
  t.epochs = o.epochs;
  t.batch = o.batch;
  t.seed = o.seed;
  t.optimizer = *optimizer;
  const auto result = TrainModel(*kind, spec, data, t);
  result.model.WriteFile(model_path);
  WriteSpecFile(SpecPath(model_path), *kind, spec);
  Json log;
  log["kind"] = std::string(ModelKindName(*kind));
  log["examples"] = data.size();
  log["epoch_loss"] = result.epoch_loss;
  Emit(out, o.out, log.dump() + "\n");
  if (!result.epoch_loss.empty()) err << "final loss " << Fixed(result.epoch_loss.back(), 6) << "\n";
}

inline void RunEval(const Options &o, std::ostream &out) {
  const std::string model_path = Require(o.model, "--model");
  const auto model = MlpModel::ReadFile(model_path);
  auto [kind, spec] = ReadSpecFile(SpecPath(model_path));
  spec.embeddings = MaybeEmbeddings(o.embeddings);
  const std::string data_path = Require(o.in, "--in");
  const auto data = BuildExamples(kind, ReadRecords(data_path), LoadContext(o, kind), data_path);
  if (spec.InputDim(kind) != model.input_dim()) throw DataError(model_path + ": model and encoding spec disagree");
  const auto r = Evaluate(model, kind, spec, data);
  Json j;
  j["kind"] = std::string(ModelKindName(kind));
  auto acc = [](const Accuracy &a) {
    Json x;
    x["correct"] = a.correct;
    x["total"] = a.total;
    x["accuracy"] = a.value();
    return x;
  };
  j["overall"] = acc(r.overall);
  j["first_order"] = acc(r.first_order);
  j["second_order"] = acc(r.second_order);
  Emit(out, o.out, j.dump() + "\n");
}

inline void RunExplain(const Options &o, std::ostream &out) {
  std::vector<std::pair<std::string, ImageId>> items;
  if (!o.question.empty()) {
    if (o.image < 0) throw CLI::RequiredError("--image");
    items.emplace_back(o.question, o.image);
  } else {
    for (const auto &q : ReadQuestions(Require(o.in, "--in or --question"))) items.emplace_back(q.text, q.image_id);
  }
  std::optional<AnnotationStore> store;
  std::optional<MlpModel> model;
  EncodingSpec spec;
  std::optional<FeatureStore> features;
  if (!o.model.empty()) {
    model = MlpModel::ReadFile(o.model);
    auto [kind, s] = ReadSpecFile(SpecPath(o.model));
    if (kind != ModelKind::FPD) throw InvalidArgument("explain needs an fpd model");
    spec = std::move(s);
    features = FeatureStore::ReadFile(Require(o.features, "--features"));
  } else {
    store = AnnotationStore::Load(Require(o.objects, "--model or --objects"), o.attributes, o.lexicon, o.aliases);
  }
  std::string text;
  for (const auto &[question, image] : items) {
    const QuestionVerdict v = store ? ExplainQuestion(question, *store, image)
                                    : ExplainQuestion(question, *model, spec, features->Get(image));
    if (o.jsonl) {
      for (const auto &e : v.explanations) text += ExplanationToJson(e).dump() + "\n";
    } else if (v.relevant()) {
      text += "relevant\n";
    } else {
      for (const auto &e : v.explanations) text += e.sentence + "\n";
    }
  }
  Emit(out, o.out, text);
}

inline void RunStats(const Options &o, std::ostream &out) {
  std::string text;
  if (!o.answer_types.empty()) {
    const auto c = AnswerTypeDistribution(ReadQAPairs(o.answer_types));
    text += "type\tcount\n";
    text += "other\t" + std::to_string(c.other) + "\n";
    text += "number\t" + std::to_string(c.number) + "\n";
    text += "yes\t" + std::to_string(c.yes) + "\n";
    text += "no\t" + std::to_string(c.no) + "\n";
    text += "total\t" + std::to_string(c.total) + "\n";
  }
  if (!o.tuples.empty()) {
    const auto tuples = ReadTuples(o.tuples);
    const auto s = ComputeDatasetStats(tuples);
    text += "total\t" + std::to_string(s.total) + "\n";
    text += "unique_premises\t" + std::to_string(s.unique_premises) + "\n";
    text += "unique_questions\t" + std::to_string(s.unique_questions) + "\n";
    text += "first_order\t" + std::to_string(s.first_order) + "\n";
    text += "second_order\t" + std::to_string(s.second_order) + "\n";
    for (const auto &[k, v] : s.by_split) text += "split:" + k + "\t" + std::to_string(v) + "\n";
    if (o.bucket > 0.0) {
      const auto features = FeatureStore::ReadFile(Require(o.features, "--features"));
      std::vector<ImageId> positives;
      for (const auto &t : tuples) positives.push_back(t.pos_image);
      const auto selected = PairDistanceHistogram(TuplePairs(tuples), features, o.bucket);
      const auto random = PairDistanceHistogram(RandomPairs(positives, features.Ids(), o.seed), features, o.bucket);
      text += "\n[selected pairs]\n" + selected.ToText();
      text += "\n[random pairs]\n" + random.ToText();
    }
  }
  if (text.empty()) throw CLI::RequiredError("--answer-types or --tuples");
  Emit(out, o.out, text);
}

// Config values fill options the command line left unset.
inline void ApplyConfig(CLI::App &sub, const Config &config) {
  for (const auto &[key, value] : config.values()) {
    CLI::Option *opt = sub.get_option_no_throw("--" + key);
    if (!opt || opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

}  // namespace detail

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 1 on usage errors and 2 on data errors.
inline int Run(const std::vector<std::string> &args, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  Options o;
  CLI::App app{"premise-forge: premise extraction, QRPE construction and relevance models"};
  app.require_subcommand(1);

  auto common_in_out = [&](CLI::App *s) {
    s->add_option("--in", o.in, "input file");
    s->add_option("--out", o.out, "output file (stdout when omitted)");
  };
  auto annotations = [&](CLI::App *s) {
    s->add_option("--objects", o.objects, "object-presence JSONL");
    s->add_option("--attributes", o.attributes, "object-attribute JSONL");
    s->add_option("--lexicon", o.lexicon, "exclusion lexicon (ANTONYM / SISTER lines)");
    s->add_option("--aliases", o.aliases, "class alias table");
  };
  auto model_inputs = [&](CLI::App *s) {
    s->add_option("--model", o.model, "model file (sidecar at <model>.json)");
    s->add_option("--questions", o.questions, "questions JSONL");
    s->add_option("--features", o.features, "PFV1 image feature file");
    s->add_option("--embeddings", o.embeddings, "word vectors for mean-embedding encoding");
    s->add_option("--captions", o.captions, "captions JSONL {image_id, caption}");
  };

  auto *extract = app.add_subcommand("extract", "questions -> premises JSONL");
  common_in_out(extract);
  extract->add_flag("--strict", o.strict, "drop existential and counting questions");

  auto *generate = app.add_subcommand("generate", "questions -> templated QA pairs JSONL");
  common_in_out(generate);
  generate->add_option("--threshold", o.threshold, "SPICE F1 dedup threshold")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--strategy", o.strategy, "augmentation strategy filter");
  generate->add_option("--merged", o.merged, "also write the merged training set here");

  auto *build = app.add_subcommand("build-qrpe", "questions + annotations + features -> QRPE tuples");
  common_in_out(build);
  annotations(build);
  build->add_option("--features", o.features, "PFV1 image feature file");
  build->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  build->add_flag("--normalize", o.normalize, "L2-normalize image features before ranking");
  build->add_option("--records", o.records, "also write balanced relevance records here");
  build->add_option("--stats", o.stats, "write dataset statistics JSON here");

  auto *train = app.add_subcommand("train", "relevance records -> model file");
  common_in_out(train);
  model_inputs(train);
  train->add_option("--kind", o.kind, "rel-q, rel-qp, cap-qc, cap-pc, cap-qpc or fpd");
  train->add_option("--seed", o.seed, "root seed");
  train->add_option("--hidden", o.hidden, "hidden layer sizes, comma separated");
  train->add_option("--lr", o.lr, "learning rate")->check(CLI::PositiveNumber);
  train->add_option("--epochs", o.epochs, "epochs");
  train->add_option("--batch", o.batch, "batch size")->check(CLI::PositiveNumber);
  train->add_option("--optimizer", o.optimizer, "sgd or adam");

  auto *eval = app.add_subcommand("eval", "model + relevance records -> accuracy");
  common_in_out(eval);
  model_inputs(eval);

  auto *explain = app.add_subcommand("explain", "question + image -> false-premise explanations");
  common_in_out(explain);
  annotations(explain);
  explain->add_option("--model", o.model, "fpd model file");
  explain->add_option("--features", o.features, "PFV1 image feature file");
  explain->add_option("--question", o.question, "question text");
  explain->add_option("--image", o.image, "image id");
  explain->add_flag("--jsonl", o.jsonl, "emit {premise, sentence} records");

  auto *stats = app.add_subcommand("stats", "distributions and histograms");
  stats->add_option("--out", o.out, "output file (stdout when omitted)");
  stats->add_option("--answer-types", o.answer_types, "QA pairs JSONL");
  stats->add_option("--tuples", o.tuples, "QRPE tuples JSONL");
  stats->add_option("--features", o.features, "PFV1 image feature file");
  stats->add_option("--bucket", o.bucket, "histogram bucket width")->check(CLI::PositiveNumber);
  stats->add_option("--seed", o.seed, "seed for the random pairing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (const char *path = std::getenv(kConfigEnv); path && *path) {
      const Config config = Config::FromFile(path);
      config.Validate();
      for (auto *sub : app.get_subcommands()) detail::ApplyConfig(*sub, config);
    }
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const DataError &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  try {
    if (extract->parsed()) detail::RunExtract(o, out);
    else if (generate->parsed()) detail::RunGenerate(o, out);
    else if (build->parsed()) detail::RunBuildQrpe(o, out, err);
    else if (train->parsed()) detail::RunTrain(o, out, err);
    else if (eval->parsed()) detail::RunEval(o, out);
    else if (explain->parsed()) detail::RunExplain(o, out);
    else if (stats->parsed()) detail::RunStats(o, out);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace pforge::cli

#endif  // PREMISE_FORGE_CLI_HPP
