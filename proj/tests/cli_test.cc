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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "json.hpp"
#include "qafeat/cli.h"
#include "qafeat/corpus.h"
#include "qafeat/resources.h"

namespace qafeat {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qafeat");
  std::ostringstream out, err;
  CliRun r;
  r.status = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<nlohmann::json> JsonLines(const std::string& text) {
  std::vector<nlohmann::json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
  }
  return lines;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qafeat_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string WriteSynthetic(size_t n) const {
    std::string path = Path("synthetic.jsonl");
    std::ofstream(path) << DatasetToJsonl(testing::SyntheticFounderDataset(n));
    return path;
  }

  fs::path dir_;
  const std::string mini_ = testing::DataPath("mini.jsonl");
};

TEST_F(CliTest, ExtractWritesOneLinePerQuestion) {
  const std::string out = Path("fv.jsonl");
  CliRun r = Cli({"extract", "--dataset", mini_, "--out", out});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto lines = JsonLines(ReadFile(out));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["id"], "kbc-telangana");
  EXPECT_EQ(lines[0]["headword"], "sportsperson");
  EXPECT_TRUE(lines[0]["features"].contains("ST_DR:state|nmod:of|telangana"));
}

TEST_F(CliTest, ScoreModesDifferOnlyInFfAndMode) {
  CliRun linear = Cli({"score", "--dataset", mini_, "--mode", "linear"});
  CliRun logp = Cli({"score", "--dataset", mini_, "--mode", "log_product"});
  ASSERT_EQ(linear.status, kExitOk) << linear.err;
  ASSERT_EQ(logp.status, kExitOk) << logp.err;
  auto a = JsonLines(linear.out);
  auto b = JsonLines(logp.out);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_EQ(a.size(), 5u);
  for (size_t i = 0; i < a.size(); ++i) {
    nlohmann::json diff = nlohmann::json::diff(a[i], b[i]);
    std::set<std::string> paths;
    for (const auto& op : diff) paths.insert(op["path"].get<std::string>());
    EXPECT_EQ(paths, (std::set<std::string>{"/ff", "/mode"}));
  }
}

TEST_F(CliTest, RankAnswersMiniDataset) {
  CliRun r = Cli({"rank", "--dataset", mini_});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  auto lines = JsonLines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["answer"], "Sania Mirza");
  EXPECT_EQ(lines[0]["ranked"][0]["doc_id"], "d1");
  for (const auto& l : lines) EXPECT_TRUE(l["answer_correct"].get<bool>()) << l.dump();
}

TEST_F(CliTest, CvIsByteIdentical) {
  const std::string data = WriteSynthetic(20);
  CliRun a = Cli({"cv", "--dataset", data, "--k", "10", "--seed", "7"});
  CliRun b = Cli({"cv", "--dataset", data, "--k", "10", "--seed", "7"});
  ASSERT_EQ(a.status, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["folds"].size(), 10u);
  EXPECT_EQ(j["pooled"]["recall"], 1.0);
  EXPECT_EQ(j["config_echo"]["k"], 10);
}

TEST_F(CliTest, EvalAndRelevanceFromReports) {
  const std::string data = WriteSynthetic(6);
  const std::string full = Path("full.json");
  const std::string ablated = Path("no_un.json");
  ASSERT_EQ(Cli({"eval", "--dataset", data, "--out", full, "--standard-metrics"}).status,
            kExitOk);
  ASSERT_EQ(Cli({"eval", "--dataset", data, "--out", ablated, "--ablate", "UN,BI"}).status,
            kExitOk);
  auto report = nlohmann::json::parse(ReadFile(full));
  EXPECT_TRUE(report["pooled"].contains("standard"));

  CliRun r = Cli({"relevance", full, ablated});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  auto table = nlohmann::json::parse(r.out);
  EXPECT_TRUE(table.contains("all"));
  EXPECT_TRUE(table.contains("without:UN,BI"));
  EXPECT_EQ(table["all"]["bucket"], 5);
}

TEST_F(CliTest, RelevanceFromTable) {
  const std::string tsv = Path("t3.tsv");
  std::ofstream(tsv) << "# feature\tdataset\tcorrect\ttotal\n"
                        "Bigrams\tWebQ\t82\t100\nBigrams\tTREC\t79\t100\nBigrams\tKBC\t88\t100\n";
  CliRun r = Cli({"relevance", "--table", tsv});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  auto table = nlohmann::json::parse(r.out);
  EXPECT_EQ(table["Bigrams"]["fr_exact"], "83/200");
  EXPECT_EQ(table["Bigrams"]["bucket"], 5);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{},
                                             {"bogus"},
                                             {"score", "--dataset", mini_, "--mode", "cubic"},
                                             {"cv", "--dataset", mini_, "--k", "1"},
                                             {"score", "--dataset", mini_, "--ablate", "XX"},
                                             {"extract"},
                                             {"relevance"}}) {
    CliRun r = Cli(args);
    EXPECT_EQ(r.status, kExitUsage) << (args.empty() ? "" : args[0]);
    EXPECT_NE(r.err.find("usage:"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
  }
}

TEST_F(CliTest, DataErrorsExitOne) {
  const std::string bad = Path("bad.jsonl");
  std::ofstream(bad) << "{\"id\": \"x\"}\n";
  EXPECT_EQ(Cli({"extract", "--dataset", bad}).status, kExitDataError);
  EXPECT_EQ(Cli({"extract", "--dataset", Path("missing.jsonl")}).status, kExitDataError);
  EXPECT_EQ(Cli({"cv", "--dataset", mini_, "--k", "5"}).status, kExitDataError);
  EXPECT_EQ(Cli({"extract", "--dataset", mini_, "--lexicon", Path("nope.tsv")}).status,
            kExitDataError);
}

TEST_F(CliTest, HelpPerSubcommand) {
  CliRun r = Cli({"cv", "--help"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("--k"), std::string::npos);
}

TEST_F(CliTest, ResourceOverride) {
  const std::string lexicon = Path("lex.tsv");
  std::ofstream(lexicon) << "sportsperson\tathlete\n";
  CliRun r = Cli({"extract", "--dataset", mini_, "--lexicon", lexicon});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  auto lines = JsonLines(r.out);
  EXPECT_TRUE(lines[0]["features"].contains("HH:athlete"));
  EXPECT_FALSE(lines[0]["features"].contains("HH:contestant"));
}

}  // namespace
}  // namespace qafeat
