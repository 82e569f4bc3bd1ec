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

#include <set>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "qafeat/error.h"
#include "qafeat/evaluation.h"

namespace qafeat {
namespace {

using testing::MakeSentence;

const Resources& Res() { return DefaultResources(); }

QAInstance TelanganaInstance() {
  QAInstance inst;
  inst.id = "kbc-1";
  inst.question = testing::TelanganaQuestion();
  inst.gold_answer = "Sania Mirza";
  inst.documents = {testing::TelanganaDocument()};
  return inst;
}

TEST(MetricsTest, WorkedExamples) {
  Metrics m = ComputeMetrics({5, 0, 5, 0});
  EXPECT_DOUBLE_EQ(m.precision, 0.5);
  EXPECT_DOUBLE_EQ(m.recall, 1.0);
  EXPECT_NEAR(m.f_measure, 2.0 / 3.0, 1e-12);

  m = ComputeMetrics({8, 0, 2, 4});
  EXPECT_DOUBLE_EQ(m.precision, 0.8);
  EXPECT_NEAR(m.recall, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(m.f_measure, 8.0 / 11.0, 1e-12);

  m = ComputeMetrics({0, 3, 2, 1});
  EXPECT_EQ(m.precision, 0.0);
  EXPECT_EQ(m.recall, 0.0);
  EXPECT_EQ(m.f_measure, 0.0);
  m = ComputeMetrics({});
  EXPECT_EQ(m.f_measure, 0.0);
}

TEST(MetricsTest, Standard) {
  Metrics m = StandardMetrics({3, 1, 0, 0}, 6);
  EXPECT_DOUBLE_EQ(m.precision, 0.75);
  EXPECT_DOUBLE_EQ(m.recall, 0.5);
  EXPECT_EQ(StandardMetrics({}, 0).recall, 0.0);
}

TEST(RelevanceTest, BigramRowAndBounds) {
  RelevanceScore r = FeatureRelevance({{"WebQ", 82, 100}, {"TREC", 79, 100}, {"KBC", 88, 100}});
  EXPECT_EQ(r.fr, Rational(249, 600));
  EXPECT_EQ(r.bucket, 5);
  EXPECT_EQ(FeatureRelevance({{"a", 0, 10}}).bucket, 1);
  RelevanceScore all = FeatureRelevance({{"a", 10, 10}});
  EXPECT_EQ(all.fr, Rational(1, 2));
  EXPECT_EQ(all.bucket, 5);
}

TEST(RelevanceTest, BucketBoundaries) {
  EXPECT_EQ(RelevanceBucket(Rational(0)), 1);
  EXPECT_EQ(RelevanceBucket(Rational(1, 10)), 1);
  EXPECT_EQ(RelevanceBucket(Rational(101, 1000)), 2);
  EXPECT_EQ(RelevanceBucket(Rational(3, 10)), 3);
  EXPECT_EQ(RelevanceBucket(Rational(31, 100)), 4);
  EXPECT_EQ(RelevanceBucket(Rational(1, 2)), 5);
}

TEST(RelevanceTest, ReferenceTallyBuckets) {
  std::set<std::string> mismatched;
  for (const testing::ReferenceTallyRow& row : testing::ReferenceTallyRows()) {
    RelevanceScore r = FeatureRelevance(
        {{"WebQ", row.webq, 100}, {"TREC", row.trec, 100}, {"KBC", row.kbc, 100}});
    if (r.bucket != row.printed_bucket) mismatched.insert(row.feature);
  }
  EXPECT_EQ(mismatched, (std::set<std::string>{"Wh-word", "Headword Tag", "St with NER"}));
}

TEST(RelevanceTest, Errors) {
  EXPECT_THROW(FeatureRelevance({{"a", 0, 0}}), Error);
  EXPECT_THROW(FeatureRelevance({}), Error);
  EXPECT_THROW(FeatureRelevance({{"a", 5, 4}}), Error);
  EXPECT_THROW(FeatureRelevance({{"a", -1, 4}}), Error);
}

TEST(AnswerTypeTest, Rules) {
  auto eat = [](const ParsedSentence& q) {
    return ExpectedAnswerType(q, ExtractHeadword(q, Res().headword_rules), Res().lexicon,
                              Res().eat_map);
  };
  ParsedSentence largest = MakeSentence({{"which", "WDT", 2, "attr"},
                                         {"is", "VBZ", 0, "root"},
                                         {"the", "DT", 5, "det"},
                                         {"largest", "JJS", 5, "amod"},
                                         {"city", "NN", 2, "nsubj"},
                                         {"of", "IN", 8, "case"},
                                         {"the", "DT", 8, "det"},
                                         {"world", "NN", 5, "nmod:of"},
                                         {"?", ".", 2, "punct"}});
  EXPECT_EQ(eat(largest), "LOCATION");
  const auto cases = testing::HeadwordGoldenCases();
  EXPECT_EQ(eat(cases[1].question), "PERSON");
  // flower -> ... -> living_thing has no entry in the default map.
  EXPECT_EQ(eat(cases[3].question), "OTHER");
  EXPECT_EQ(eat(testing::TelanganaQuestion()), "PERSON");
  ParsedSentence how = MakeSentence({{"How", "WRB", 2, "advmod"},
                                     {"many", "JJ", 3, "amod"},
                                     {"states", "NNS", 0, "root"},
                                     {"?", ".", 3, "punct"}});
  EXPECT_EQ(eat(how), "NUMBER");
  ParsedSentence when = MakeSentence({{"When", "WRB", 2, "advmod"},
                                      {"formed", "VBN", 0, "root"},
                                      {"?", ".", 2, "punct"}});
  EXPECT_EQ(eat(when), "DATE");
}

TEST(RankTest, TelanganaAnswer) {
  QAInstance inst = TelanganaInstance();
  inst.documents.push_back(
      {"d0", {MakeSentence({{"Rivers", "NNS", 2, "nsubj"}, {"flow", "VBP", 0, "root"}})}});
  AnswerResult r = RankAndAnswer(inst, Res(), {});
  EXPECT_EQ(r.expected_type, "PERSON");
  ASSERT_EQ(r.ranked.size(), 2u);
  EXPECT_EQ(r.ranked[0].doc_id, "d1");
  ASSERT_TRUE(r.answer.has_value());
  EXPECT_NE(NormalizeAnswer(*r.answer).find("sania"), std::string::npos);
  EXPECT_FALSE(r.fallback);
}

TEST(RankTest, TiesBreakByDocId) {
  QAInstance inst = TelanganaInstance();
  Document copy = inst.documents[0];
  inst.documents[0].doc_id = "zeta";
  copy.doc_id = "alpha";
  inst.documents.push_back(copy);
  for (FfMode mode : {FfMode::kLinear, FfMode::kLogProduct}) {
    ScoringOptions options;
    options.mode = mode;
    AnswerResult r = RankAndAnswer(inst, Res(), options);
    EXPECT_EQ(r.ranked[0].doc_id, "alpha");
    EXPECT_EQ(r.ranked[0].score.form.ff, r.ranked[1].score.form.ff);
  }
}

TEST(RankTest, FallbackNoun) {
  QAInstance inst = TelanganaInstance();
  inst.documents = {{"plain", {MakeSentence({{"The", "DT", 2, "det"},
                                             {"ambassador", "NN", 3, "nsubj"},
                                             {"spoke", "VBD", 0, "root"},
                                             {".", ".", 3, "punct"}})}}};
  AnswerResult r = RankAndAnswer(inst, Res(), {});
  EXPECT_TRUE(r.fallback);
  EXPECT_EQ(r.answer, "ambassador");
}

TEST(RankTest, OptionsSnap) {
  QAInstance inst = TelanganaInstance();
  inst.options = {"Saina Nehwal", "Sania Mirza Malik", "Mithali Raj"};
  AnswerResult r = RankAndAnswer(inst, Res(), {});
  EXPECT_TRUE(r.snapped);
  EXPECT_EQ(r.answer, "Sania Mirza Malik");
}

TEST(RankTest, NoDocuments) {
  QAInstance inst = TelanganaInstance();
  inst.documents.clear();
  try {
    RankAndAnswer(inst, Res(), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoDocuments);
  }
}

TEST(JudgeTest, ExactMatchAfterNormalization) {
  EXPECT_EQ(NormalizeAnswer("  Sania \t Mirza "), "sania mirza");
  QAInstance inst = TelanganaInstance();
  std::vector<DocumentFeatures> docs = {ExtractDocumentFeatures(inst.documents[0], Res())};
  AnswerResult r;
  r.ranked.push_back({"d1", {}});
  r.answer = "SANIA   mirza";
  InstanceOutcome o = JudgeInstance(inst, r, docs);
  EXPECT_TRUE(o.answer_correct);
  EXPECT_TRUE(o.document_correct);
  r.answer = "Sania";
  EXPECT_FALSE(JudgeInstance(inst, r, docs).answer_correct);
}

TEST(EvaluateTest, SyntheticRecallIsOne) {
  Dataset ds = testing::SyntheticFounderDataset(12);
  Report r = Evaluate(ds, Res(), {});
  EXPECT_EQ(r.questions, 12);
  EXPECT_EQ(r.counts.ca, 12);
  EXPECT_EQ(r.counts.ia, 0);
  EXPECT_EQ(r.counts.cd, 12);
  EXPECT_DOUBLE_EQ(r.metrics.recall, 1.0);
  ASSERT_EQ(r.relevance.count("all"), 1u);
  EXPECT_EQ(r.relevance.at("all").fr, Rational(1, 2));
}

TEST(EvaluateTest, CvPartitionsAndIsDeterministic) {
  Dataset ds = testing::SyntheticFounderDataset(10);
  EvalConfig config;
  config.standard_metrics = true;
  Report a = RunCv(ds, 5, 9, Res(), config);
  Report b = RunCv(ds, 5, 9, Res(), config);
  EXPECT_EQ(a.ToJson().dump(), b.ToJson().dump());
  int64_t total = 0;
  for (const FoldReport& f : a.folds) total += f.test_size;
  EXPECT_EQ(total, 10);
  EXPECT_EQ(a.counts.ca + a.counts.ia, 10);
  ASSERT_TRUE(a.standard.has_value());
  EXPECT_DOUBLE_EQ(a.standard->recall, 1.0);
  EXPECT_THROW(RunCv(ds, 1, 9, Res(), config), Error);
  EXPECT_THROW(RunCv(ds, 11, 9, Res(), config), Error);
}

TEST(EvaluateTest, RegressionFoldsRecordFitOrNote) {
  Dataset ds = testing::SyntheticFounderDataset(12);
  EvalConfig config;
  config.regression = true;
  Report r = RunCv(ds, 3, 1, Res(), config);
  ASSERT_EQ(r.folds.size(), 3u);
  for (const FoldReport& f : r.folds) {
    EXPECT_TRUE(f.fit.has_value() || !f.note.empty());
    if (f.fit) {
      EXPECT_EQ(f.fit->coefficients.size(), 3u);
    }
  }
  EXPECT_EQ(r.counts.ca + r.counts.ia, 12);
}

TEST(EvaluateTest, HoldoutScoresTestPart) {
  Dataset ds = testing::SyntheticFounderDataset(20);
  Report r = EvaluateHoldout(SplitHoldout(ds, 4), ds.name, Res(), {});
  EXPECT_EQ(r.questions, 2);
  EXPECT_EQ(r.counts.ca + r.counts.ia, 2);
}

TEST(ReportTest, JsonShape) {
  Report r = Evaluate(testing::SyntheticFounderDataset(3), Res(), {});
  nlohmann::json j = r.ToJson();
  for (const char* key : {"config_echo", "pooled", "folds", "per_feature_relevance"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  for (const char* key : {"ca", "ia", "cd", "id", "precision", "recall", "f"}) {
    EXPECT_TRUE(j["pooled"].contains(key)) << key;
  }
  EXPECT_EQ(j["per_feature_relevance"]["all"]["bucket"], 5);
}

}  // namespace
}  // namespace qafeat
