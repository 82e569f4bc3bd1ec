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

#include "qafeat/evaluation.h"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "qafeat/error.h"
#include "qafeat/lexical.h"
#include "text_util.h"

namespace qafeat {

namespace {

double Ratio(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double Harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

nlohmann::json MetricsJson(const Metrics& m) {
  return {{"precision", Round12(m.precision)},
          {"recall", Round12(m.recall)},
          {"f", Round12(m.f_measure)}};
}

// Features of one instance, computed once and shared by every fold.
struct Prepared {
  QuestionFeatures question;
  std::vector<DocumentFeatures> documents;
};

using PreparedIndex = std::map<std::string, Prepared>;

PreparedIndex Prepare(const Dataset& dataset, const Resources& resources) {
  PreparedIndex index;
  for (const QAInstance& inst : dataset.instances) {
    Prepared p;
    p.question = ExtractQuestionFeatures(inst.question, resources);
    for (const Document& d : inst.documents) {
      p.documents.push_back(ExtractDocumentFeatures(d, resources));
    }
    index.emplace(inst.id, std::move(p));
  }
  return index;
}

bool DocumentHolds(const DocumentFeatures& doc, const std::string& gold) {
  const std::string needle = NormalizeAnswer(gold);
  if (needle.empty()) return false;
  return (" " + doc.normalized_text + " ").find(" " + needle + " ") != std::string::npos;
}

// Fits (le, sy, se) -> 0/1 document correctness over every document of
// `train`.
RegressionFit FitRegression(const Dataset& train, const PreparedIndex& prepared,
                            const ScoringOptions& base) {
  ScoringOptions plain = base;
  plain.regression.reset();
  std::vector<RegressionSample> samples;
  for (const QAInstance& inst : train.instances) {
    const Prepared& p = prepared.at(inst.id);
    for (const DocumentFeatures& d : p.documents) {
      PairScore s = ScorePair(p.question, d, plain);
      samples.push_back({{ToDouble(s.form.le), ToDouble(s.form.sy), ToDouble(s.form.se)},
                         DocumentHolds(d, inst.gold_answer) ? 1.0 : 0.0});
    }
  }
  return FitOls(samples);
}

FoldReport EvaluatePart(const Dataset& train, const Dataset& test,
                        const PreparedIndex& prepared, const Resources& resources,
                        const EvalConfig& config) {
  FoldReport report;
  ScoringOptions options = config.scoring;
  if (config.regression) {
    try {
      report.fit = FitRegression(train, prepared, config.scoring);
      options.regression = report.fit;
    } catch (const Error& e) {
      report.note = "regression unavailable, ranked by ff: " + std::string(e.what());
    }
  }
  for (const QAInstance& inst : test.instances) {
    const Prepared& p = prepared.at(inst.id);
    AnswerResult result = RankAndAnswer(inst, p.question, p.documents, resources, options);
    InstanceOutcome outcome = JudgeInstance(inst, result, p.documents);
    (outcome.answer_correct ? report.counts.ca : report.counts.ia) += 1;
    (outcome.document_correct ? report.counts.cd : report.counts.id) += 1;
  }
  report.test_size = static_cast<int64_t>(test.size());
  report.metrics = ComputeMetrics(report.counts);
  if (config.standard_metrics) {
    report.standard = StandardMetrics(report.counts, report.test_size);
  }
  return report;
}

void Finish(const Dataset& dataset, const EvalConfig& config, Report* report) {
  report->config_echo = config.config_echo;
  report->questions = static_cast<int64_t>(dataset.size());
  report->metrics = ComputeMetrics(report->counts);
  if (config.standard_metrics) {
    report->standard = StandardMetrics(report->counts, report->questions);
  }
  if (report->questions > 0) {
    report->relevance[config.feature_label] =
        FeatureRelevance({{dataset.name, report->counts.ca, report->questions}});
  }
}

}  // namespace

EvalCounts& EvalCounts::operator+=(const EvalCounts& other) {
  ca += other.ca;
  ia += other.ia;
  cd += other.cd;
  id += other.id;
  return *this;
}

Metrics ComputeMetrics(const EvalCounts& counts) {
  Metrics m;
  m.precision = Ratio(counts.ca, counts.ca + counts.cd);
  m.recall = Ratio(counts.ca, counts.ca + counts.id);
  m.f_measure = Harmonic(m.precision, m.recall);
  return m;
}

Metrics StandardMetrics(const EvalCounts& counts, int64_t questions) {
  Metrics m;
  m.precision = Ratio(counts.ca, counts.ca + counts.ia);
  m.recall = Ratio(counts.ca, questions);
  m.f_measure = Harmonic(m.precision, m.recall);
  return m;
}

int RelevanceBucket(const Rational& fr) {
  const Rational scaled = fr * 10;
  int64_t ceil = scaled.numerator() / scaled.denominator();
  if (scaled.numerator() % scaled.denominator() > 0) ++ceil;
  return static_cast<int>(std::clamp<int64_t>(ceil, 1, 5));
}

RelevanceScore FeatureRelevance(const std::vector<DatasetTally>& per_dataset) {
  if (per_dataset.empty()) throw Error(ErrorCode::kZeroTotal, "no dataset tallies");
  int64_t correct = 0;
  int64_t total = 0;
  for (const DatasetTally& t : per_dataset) {
    if (t.total <= 0) {
      throw Error(ErrorCode::kZeroTotal, "dataset " + t.dataset + " has no questions");
    }
    if (t.correct < 0 || t.correct > t.total) {
      throw Error(ErrorCode::kBadConfig,
                  "dataset " + t.dataset + " has correct outside [0, total]");
    }
    correct += t.correct;
    total += t.total;
  }
  RelevanceScore score;
  score.fr = Rational(correct, 2 * total);
  score.bucket = RelevanceBucket(score.fr);
  score.per_dataset = per_dataset;
  return score;
}

std::string ExpectedAnswerType(const ParsedSentence& question,
                               const HeadwordResult& headword,
                               const HypernymGraph& graph,
                               const CategoryMap& categories) {
  const std::string wh = WhWordOf(question.tokens);
  if (wh == "who") return "PERSON";
  if (wh == "when") return "DATE";
  if (wh == "where") return "LOCATION";
  if (wh == "how") {
    for (size_t i = 0; i + 1 < question.tokens.size(); ++i) {
      if (internal::ToLower(question.tokens[i].surface) != "how") continue;
      const std::string next = internal::ToLower(question.tokens[i + 1].surface);
      if (next == "many" || next == "much") return "NUMBER";
      break;
    }
    return std::string(kOtherAnswerType);
  }
  if (wh == "which" || wh == "what") {
    for (const ChainEntry& e : HypernymChain(graph, headword.token.surface)) {
      auto it = categories.find(e.word);
      if (it != categories.end()) return it->second;
    }
  }
  return std::string(kOtherAnswerType);
}

std::string NormalizeAnswer(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

AnswerResult RankAndAnswer(const QAInstance& instance, const QuestionFeatures& question,
                           const std::vector<DocumentFeatures>& documents,
                           const Resources& resources, const ScoringOptions& options) {
  if (documents.empty()) {
    throw Error(ErrorCode::kNoDocuments, "instance " + instance.id + " has no documents");
  }
  AnswerResult result;
  result.expected_type = ExpectedAnswerType(instance.question, question.headword,
                                            resources.lexicon, resources.eat_map);
  std::vector<size_t> order(documents.size());
  for (size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
    result.ranked.push_back({documents[i].doc_id, ScorePair(question, documents[i], options)});
  }
  const bool larger_better = options.regression.has_value() || options.mode == FfMode::kLinear;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const double va = result.ranked[a].score.rank_value;
    const double vb = result.ranked[b].score.rank_value;
    if (va != vb) return larger_better ? va > vb : va < vb;
    return result.ranked[a].doc_id < result.ranked[b].doc_id;
  });
  std::vector<RankedDocument> sorted;
  for (size_t i : order) sorted.push_back(std::move(result.ranked[i]));
  result.ranked = std::move(sorted);

  const DocumentFeatures& top = documents[order.front()];
  const Document* source = nullptr;
  for (const Document& d : instance.documents) {
    if (d.doc_id == top.doc_id) {
      source = &d;
      break;
    }
  }

  for (const DocumentMention& dm : top.mentions) {
    if (internal::ToUpper(dm.mention.tag) != result.expected_type) continue;
    if (source != nullptr) {
      std::vector<std::string> words;
      const ParsedSentence& s = source->sentences.at(dm.sentence);
      for (int i = dm.mention.begin; i <= dm.mention.end; ++i) words.push_back(s.at(i).surface);
      result.answer = internal::Join(words, " ");
    } else {
      std::string text = dm.mention.surface;
      std::replace(text.begin(), text.end(), '_', ' ');
      result.answer = text;
    }
    break;
  }

  if (!result.answer) {
    result.fallback = true;
    Rational best(-1);
    if (source != nullptr) {
      for (const ParsedSentence& s : source->sentences) {
        for (const Token& t : s.tokens) {
          if (!IsNounTag(t.pos) || IsStopword(resources.stopwords, t.surface)) continue;
          Rational w = top.vector.Get({Space::kUnigram, internal::ToLower(t.surface)});
          if (w > best) {
            best = w;
            result.answer = t.surface;
          }
        }
      }
    }
  }

  if (result.answer && !instance.options.empty()) {
    std::istringstream answer_stream(NormalizeAnswer(*result.answer));
    std::set<std::string> answer_words{std::istream_iterator<std::string>(answer_stream),
                                       std::istream_iterator<std::string>()};
    size_t best_overlap = 0;
    const std::string* best_option = &instance.options.front();
    for (const std::string& option : instance.options) {
      std::istringstream option_stream(NormalizeAnswer(option));
      std::set<std::string> option_words{std::istream_iterator<std::string>(option_stream),
                                         std::istream_iterator<std::string>()};
      size_t overlap = 0;
      for (const std::string& w : option_words) overlap += answer_words.count(w);
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best_option = &option;
      }
    }
    if (*best_option != *result.answer) {
      result.answer = *best_option;
      result.snapped = true;
    }
  }
  return result;
}

AnswerResult RankAndAnswer(const QAInstance& instance, const Resources& resources,
                           const ScoringOptions& options) {
  QuestionFeatures question = ExtractQuestionFeatures(instance.question, resources);
  std::vector<DocumentFeatures> documents;
  for (const Document& d : instance.documents) {
    documents.push_back(ExtractDocumentFeatures(d, resources));
  }
  return RankAndAnswer(instance, question, documents, resources, options);
}

InstanceOutcome JudgeInstance(const QAInstance& instance, const AnswerResult& result,
                              const std::vector<DocumentFeatures>& documents) {
  InstanceOutcome outcome;
  outcome.id = instance.id;
  outcome.result = result;
  const std::string gold = NormalizeAnswer(instance.gold_answer);
  outcome.answer_correct = result.answer && NormalizeAnswer(*result.answer) == gold;
  if (!result.ranked.empty()) {
    for (const DocumentFeatures& d : documents) {
      if (d.doc_id == result.ranked.front().doc_id) {
        outcome.document_correct = DocumentHolds(d, instance.gold_answer);
        break;
      }
    }
  }
  return outcome;
}

nlohmann::json Report::ToJson() const {
  nlohmann::json j;
  j["config_echo"] = config_echo;
  nlohmann::json pooled = {{"ca", counts.ca}, {"ia", counts.ia}, {"cd", counts.cd},
                           {"id", counts.id}, {"questions", questions}};
  pooled.update(MetricsJson(metrics));
  if (standard) pooled["standard"] = MetricsJson(*standard);
  j["pooled"] = pooled;
  j["folds"] = nlohmann::json::array();
  for (const FoldReport& f : folds) {
    nlohmann::json fj = {{"fold", f.fold},        {"test_size", f.test_size},
                         {"ca", f.counts.ca},     {"ia", f.counts.ia},
                         {"cd", f.counts.cd},     {"id", f.counts.id}};
    fj.update(MetricsJson(f.metrics));
    if (f.standard) fj["standard"] = MetricsJson(*f.standard);
    if (f.fit) {
      nlohmann::json coefficients = nlohmann::json::array();
      for (double c : f.fit->coefficients) coefficients.push_back(Round12(c));
      fj["fit"] = {{"intercept", Round12(f.fit->intercept)},
                   {"coefficients", coefficients},
                   {"r_squared", Round12(f.fit->r_squared)}};
    }
    if (!f.note.empty()) fj["note"] = f.note;
    j["folds"].push_back(fj);
  }
  nlohmann::json rel = nlohmann::json::object();
  for (const auto& [label, r] : relevance) {
    nlohmann::json tallies = nlohmann::json::array();
    for (const DatasetTally& t : r.per_dataset) {
      tallies.push_back({{"dataset", t.dataset}, {"correct", t.correct}, {"total", t.total}});
    }
    rel[label] = {{"fr", Round12(ToDouble(r.fr))},
                  {"fr_exact", std::to_string(r.fr.numerator()) + "/" +
                                   std::to_string(r.fr.denominator())},
                  {"bucket", r.bucket},
                  {"per_dataset", tallies}};
  }
  j["per_feature_relevance"] = rel;
  return j;
}

Report Evaluate(const Dataset& dataset, const Resources& resources,
                const EvalConfig& config) {
  const PreparedIndex prepared = Prepare(dataset, resources);
  Report report;
  FoldReport part = EvaluatePart(dataset, dataset, prepared, resources, config);
  report.counts = part.counts;
  if (config.regression) {
    if (part.note.empty()) part.note = "in-sample fit";
    report.folds.push_back(std::move(part));
  }
  Finish(dataset, config, &report);
  return report;
}

Report EvaluateHoldout(const Split& split, const std::string& dataset_name,
                       const Resources& resources, const EvalConfig& config) {
  PreparedIndex prepared = Prepare(split.train, resources);
  prepared.merge(Prepare(split.test, resources));
  Report report;
  FoldReport part = EvaluatePart(split.train, split.test, prepared, resources, config);
  report.counts = part.counts;
  report.folds.push_back(std::move(part));
  Dataset test = split.test;
  test.name = dataset_name;
  Finish(test, config, &report);
  return report;
}

Report RunCv(const Dataset& dataset, int k, uint64_t seed, const Resources& resources,
             const EvalConfig& config) {
  if (k < 2 || static_cast<size_t>(k) > dataset.size()) {
    throw Error(ErrorCode::kBadK, "k must lie in [2, " + std::to_string(dataset.size()) +
                                      "], got " + std::to_string(k));
  }
  const std::vector<Split> splits = KFold(dataset, k, seed);
  const PreparedIndex prepared = Prepare(dataset, resources);
  Report report;
  for (size_t i = 0; i < splits.size(); ++i) {
    FoldReport fold =
        EvaluatePart(splits[i].train, splits[i].test, prepared, resources, config);
    fold.fold = static_cast<int>(i);
    report.counts += fold.counts;
    report.folds.push_back(std::move(fold));
  }
  Finish(dataset, config, &report);
  return report;
}

}  // namespace qafeat
