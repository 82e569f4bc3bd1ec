// Copyright 2026 The qafeat Authors.
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

#include "qafeat/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qafeat/corpus.h"
#include "qafeat/error.h"
#include "qafeat/evaluation.h"
#include "qafeat/pipeline.h"
#include "qafeat/resources.h"
#include "text_util.h"

namespace qafeat {

namespace {

using nlohmann::json;

constexpr std::string_view kSynopsis =
    "usage: qafeat {extract|score|rank|eval|cv|relevance} [options]\n"
    "       qafeat <command> --help\n";

struct Options {
  std::string dataset;
  std::string out;
  ResourcePaths paths;
  std::string mode = "log_product";
  uint64_t seed = 0;
  int k = 10;
  bool standard_metrics = false;
  bool regression = false;
  std::string ablate;
  std::string label;
  std::string split = "all";
  bool verbose = false;
  std::vector<std::string> reports;
  std::string table;
};

// Usage problems found after CLI11 has accepted the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Exact(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::set<Space> ParseAblate(const std::string& list) {
  std::set<Space> spaces;
  if (list.empty()) return spaces;
  for (std::string_view item : internal::Split(list, ',')) {
    item = internal::Trim(item);
    if (item.empty()) continue;
    std::optional<Space> space = SpaceFromName(internal::ToUpper(item));
    if (!space) throw UsageError("unknown feature space in --ablate: " + std::string(item));
    spaces.insert(*space);
  }
  return spaces;
}

ScoringOptions MakeScoring(const Options& o) {
  ScoringOptions scoring;
  std::optional<FfMode> mode = FfModeFromName(o.mode);
  if (!mode) throw UsageError("--mode must be linear or log_product");
  scoring.mode = *mode;
  scoring.disabled = ParseAblate(o.ablate);
  return scoring;
}

json EchoConfig(const std::string& command, const Options& o) {
  json j = {{"command", command},       {"dataset", o.dataset},
            {"mode", o.mode},           {"seed", o.seed},
            {"ablate", o.ablate},       {"standard_metrics", o.standard_metrics},
            {"regression", o.regression}};
  if (command == "cv") j["k"] = o.k;
  if (command == "eval") j["split"] = o.split;
  return j;
}

json OverlapJson(const SpaceScore& s) {
  if (!s.score) return nullptr;
  return {{"numerator", s.score->numerator},
          {"denominator", s.score->denominator},
          {"value", Round12(ToDouble(s.score->value()))}};
}

json PairJson(const PairScore& p) {
  json per_space = json::object();
  for (const SpaceScore& s : p.per_space) per_space[std::string(SpaceName(s.space))] = OverlapJson(s);
  const FeatureFormScore& f = p.form;
  return {{"le", Round12(ToDouble(f.le))}, {"le_exact", Exact(f.le)},
          {"sy", Round12(ToDouble(f.sy))}, {"sy_exact", Exact(f.sy)},
          {"se", Round12(ToDouble(f.se))}, {"se_exact", Exact(f.se)},
          {"st", f.st},                    {"ff", Round12(f.ff)},
          {"mode", std::string(FfModeName(f.mode))},
          {"per_space", per_space}};
}

json WeightJson(const StructuralWeight& w) {
  return {{"dp", w.weight_dp}, {"dr", w.weight_dr}, {"ner", w.weight_ner}, {"total", w.total}};
}

// Writes to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::kIoFailure, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  void Close() {
    stream_->flush();
    if (!*stream_) throw Error(ErrorCode::kIoFailure, "write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

Dataset RequireDataset(const Options& o, std::ostream& err) {
  if (o.dataset.empty()) throw UsageError("--dataset is required");
  Dataset ds = LoadDataset(o.dataset);
  if (o.verbose) err << "loaded " << ds.size() << " instances from " << o.dataset << "\n";
  return ds;
}

int RunExtract(const Options& o, std::ostream& out, std::ostream& err) {
  const Dataset ds = RequireDataset(o, err);
  const Resources res = LoadResources(o.paths);
  Sink sink(o.out, out);
  for (const QAInstance& inst : ds.instances) {
    QuestionFeatures q = ExtractQuestionFeatures(inst.question, res);
    json line = {{"id", inst.id},
                 {"headword", q.headword.token.surface},
                 {"structural_weight", WeightJson(q.structural.weight)},
                 {"features", q.vector.ToJson()}};
    sink.get() << line.dump() << "\n";
  }
  sink.Close();
  return kExitOk;
}

int RunScore(const Options& o, std::ostream& out, std::ostream& err) {
  const ScoringOptions scoring = MakeScoring(o);
  const Dataset ds = RequireDataset(o, err);
  const Resources res = LoadResources(o.paths);
  Sink sink(o.out, out);
  for (const QAInstance& inst : ds.instances) {
    QuestionFeatures q = ExtractQuestionFeatures(inst.question, res);
    for (const Document& d : inst.documents) {
      DocumentFeatures df = ExtractDocumentFeatures(d, res);
      json line = {{"id", inst.id}, {"doc_id", d.doc_id}};
      line.update(PairJson(ScorePair(q, df, scoring)));
      sink.get() << line.dump() << "\n";
    }
  }
  sink.Close();
  return kExitOk;
}

int RunRank(const Options& o, std::ostream& out, std::ostream& err) {
  const ScoringOptions scoring = MakeScoring(o);
  const Dataset ds = RequireDataset(o, err);
  const Resources res = LoadResources(o.paths);
  Sink sink(o.out, out);
  for (const QAInstance& inst : ds.instances) {
    QuestionFeatures q = ExtractQuestionFeatures(inst.question, res);
    std::vector<DocumentFeatures> docs;
    for (const Document& d : inst.documents) docs.push_back(ExtractDocumentFeatures(d, res));
    AnswerResult r = RankAndAnswer(inst, q, docs, res, scoring);
    InstanceOutcome outcome = JudgeInstance(inst, r, docs);
    json ranked = json::array();
    for (const RankedDocument& d : r.ranked) {
      ranked.push_back({{"doc_id", d.doc_id}, {"score", Round12(d.score.rank_value)}});
    }
    json line = {{"id", inst.id},
                 {"expected_type", r.expected_type},
                 {"ranked", ranked},
                 {"answer", r.answer ? json(*r.answer) : json(nullptr)},
                 {"fallback", r.fallback},
                 {"snapped", r.snapped},
                 {"answer_correct", outcome.answer_correct},
                 {"document_correct", outcome.document_correct}};
    sink.get() << line.dump() << "\n";
  }
  sink.Close();
  return kExitOk;
}

EvalConfig MakeEvalConfig(const std::string& command, const Options& o) {
  EvalConfig config;
  config.scoring = MakeScoring(o);
  config.standard_metrics = o.standard_metrics;
  config.regression = o.regression;
  if (!o.label.empty()) {
    config.feature_label = o.label;
  } else if (!o.ablate.empty()) {
    config.feature_label = "without:" + o.ablate;
  }
  config.config_echo = EchoConfig(command, o);
  return config;
}

int RunEval(const Options& o, std::ostream& out, std::ostream& err) {
  const EvalConfig config = MakeEvalConfig("eval", o);
  if (o.split != "all" && o.split != "holdout") {
    throw UsageError("--split must be all or holdout");
  }
  const Dataset ds = RequireDataset(o, err);
  const Resources res = LoadResources(o.paths);
  Report report = o.split == "all"
                      ? Evaluate(ds, res, config)
                      : EvaluateHoldout(SplitHoldout(ds, o.seed), ds.name, res, config);
  Sink sink(o.out, out);
  sink.get() << report.ToJson().dump(2) << "\n";
  sink.Close();
  return kExitOk;
}

int RunCvCommand(const Options& o, std::ostream& out, std::ostream& err) {
  const EvalConfig config = MakeEvalConfig("cv", o);
  if (o.k < 2) throw UsageError("--k must be at least 2");
  const Dataset ds = RequireDataset(o, err);
  const Resources res = LoadResources(o.paths);
  Report report = RunCv(ds, o.k, o.seed, res, config);
  if (o.verbose) {
    for (const FoldReport& f : report.folds) {
      err << "fold " << f.fold << ": " << f.counts.ca << "/" << f.test_size << " correct\n";
    }
  }
  Sink sink(o.out, out);
  sink.get() << report.ToJson().dump(2) << "\n";
  sink.Close();
  return kExitOk;
}

// Tallies keyed by feature label, then dataset.
using TallyTable = std::map<std::string, std::map<std::string, DatasetTally>>;

void AddTally(TallyTable* table, const std::string& label, const DatasetTally& t) {
  DatasetTally& slot = (*table)[label][t.dataset];
  slot.dataset = t.dataset;
  slot.correct += t.correct;
  slot.total += t.total;
}

int64_t RequireInt(const json& j, const char* field, const std::string& source) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw Error(ErrorCode::kMissingField, source + ": missing integer " + field);
  }
  return j[field].get<int64_t>();
}

int RunRelevance(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.reports.empty() && o.table.empty()) {
    throw UsageError("relevance needs report files or --table");
  }
  TallyTable table;
  for (const std::string& path : o.reports) {
    json j = json::parse(ReadFile(path), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorCode::kMalformedLine, path + ": not a JSON report");
    }
    if (!j.contains("per_feature_relevance") || !j["per_feature_relevance"].is_object()) {
      throw Error(ErrorCode::kMissingField, path + ": missing per_feature_relevance");
    }
    for (const auto& [label, entry] : j["per_feature_relevance"].items()) {
      if (!entry.contains("per_dataset") || !entry["per_dataset"].is_array()) {
        throw Error(ErrorCode::kMissingField, path + ": missing per_dataset for " + label);
      }
      for (const json& t : entry["per_dataset"]) {
        if (!t.contains("dataset") || !t["dataset"].is_string()) {
          throw Error(ErrorCode::kMissingField, path + ": tally without dataset");
        }
        AddTally(&table, label,
                 {t["dataset"].get<std::string>(), RequireInt(t, "correct", path),
                  RequireInt(t, "total", path)});
      }
    }
    if (o.verbose) err << "read " << path << "\n";
  }
  if (!o.table.empty()) {
    const std::string text = ReadFile(o.table);
    int line_no = 0;
    for (std::string_view line : internal::SplitLines(text)) {
      ++line_no;
      std::string_view body = internal::StripComment(line);
      if (body.empty()) continue;
      std::vector<std::string_view> cols = internal::Split(body, '\t');
      int64_t correct = 0;
      int64_t total = 0;
      if (cols.size() != 4 ||
          !(std::istringstream(std::string(cols[2])) >> correct) ||
          !(std::istringstream(std::string(cols[3])) >> total)) {
        throw Error(ErrorCode::kMalformedLine,
                    o.table + ":" + std::to_string(line_no) +
                        ": expected feature<TAB>dataset<TAB>correct<TAB>total");
      }
      AddTally(&table, std::string(cols[0]), {std::string(cols[1]), correct, total});
    }
  }

  json result = json::object();
  for (const auto& [label, by_dataset] : table) {
    std::vector<DatasetTally> tallies;
    for (const auto& [name, t] : by_dataset) tallies.push_back(t);
    RelevanceScore r = FeatureRelevance(tallies);
    json per_dataset = json::array();
    for (const DatasetTally& t : r.per_dataset) {
      per_dataset.push_back({{"dataset", t.dataset}, {"correct", t.correct}, {"total", t.total}});
    }
    result[label] = {{"fr", Round12(ToDouble(r.fr))},
                     {"fr_exact", Exact(r.fr)},
                     {"bucket", r.bucket},
                     {"per_dataset", per_dataset}};
  }
  Sink sink(o.out, out);
  sink.get() << result.dump(2) << "\n";
  sink.Close();
  return kExitOk;
}

void AddResourceFlags(CLI::App* cmd, Options* o) {
  cmd->add_option("--lexicon", o->paths.lexicon, "Hypernym lexicon TSV");
  cmd->add_option("--stopwords", o->paths.stopwords, "Stopword list");
  cmd->add_option("--headword-rules", o->paths.headword_rules, "Headword rule table");
  cmd->add_option("--dp-config", o->paths.dp_config, "Design-principle config");
  cmd->add_option("--eat-map", o->paths.eat_map, "Hypernym to answer-type map");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Question answering feature extraction and evaluation", "qafeat");
  app.require_subcommand(1);

  CLI::App* extract = app.add_subcommand("extract", "Write question feature vectors (JSONL)");
  CLI::App* score = app.add_subcommand("score", "Write feature-form scores per document (JSONL)");
  CLI::App* rank = app.add_subcommand("rank", "Rank documents and extract answers (JSONL)");
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a dataset (JSON report)");
  CLI::App* cv = app.add_subcommand("cv", "k-fold cross validation (JSON report)");
  CLI::App* relevance =
      app.add_subcommand("relevance", "Feature relevance from reports or a tally table");

  for (CLI::App* cmd : {extract, score, rank, eval, cv}) {
    cmd->add_option("--dataset", o.dataset, "Dataset JSONL");
    AddResourceFlags(cmd, &o);
    cmd->add_flag("--verbose", o.verbose, "Log progress to stderr");
  }
  for (CLI::App* cmd : {extract, score, rank, eval, cv, relevance}) {
    cmd->add_option("--out", o.out, "Output file (default stdout)");
  }
  for (CLI::App* cmd : {score, rank, eval, cv}) {
    cmd->add_option("--mode", o.mode, "linear or log_product")->capture_default_str();
    cmd->add_option("--ablate", o.ablate, "Comma-separated feature spaces to leave out");
  }
  for (CLI::App* cmd : {eval, cv}) {
    cmd->add_option("--seed", o.seed, "Shuffle seed")->capture_default_str();
    cmd->add_flag("--standard-metrics", o.standard_metrics,
                  "Also report CA/(CA+IA) precision and CA/questions recall");
    cmd->add_flag("--regression", o.regression,
                  "Rank with an OLS model fitted on the training portion");
    cmd->add_option("--label", o.label, "Feature label for the relevance entry");
  }
  cv->add_option("--k", o.k, "Number of folds")->capture_default_str();
  eval->add_option("--split", o.split, "all or holdout")->capture_default_str();
  relevance->add_option("reports", o.reports, "Report JSON files");
  relevance->add_option("--table", o.table, "TSV of feature, dataset, correct, total");
  relevance->add_flag("--verbose", o.verbose, "Log progress to stderr");

  // CLI11 consumes arguments from the back; drop the program name.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kExitUsage;
  }

  try {
    if (extract->parsed()) return RunExtract(o, out, err);
    if (score->parsed()) return RunScore(o, out, err);
    if (rank->parsed()) return RunRank(o, out, err);
    if (eval->parsed()) return RunEval(o, out, err);
    if (cv->parsed()) return RunCvCommand(o, out, err);
    return RunRelevance(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace qafeat
