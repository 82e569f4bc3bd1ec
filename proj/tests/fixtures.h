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

#ifndef QAFEAT_TESTS_FIXTURES_H_
#define QAFEAT_TESTS_FIXTURES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qafeat/corpus.h"

namespace qafeat {
namespace testing {

// Absolute path of a file under tests/data.
std::string DataPath(const std::string& name);
std::string ReadDataFile(const std::string& name);

// One token row: surface, POS, head, deprel, NE tag. Lemma = lowercased
// surface.
struct Row {
  std::string surface;
  std::string pos;
  int head = 0;
  std::string deprel;
  std::string ner = "O";
};
ParsedSentence MakeSentence(const std::vector<Row>& rows);

// "Which sportsperson was made the brand ambassador of newly formed state of
// Telangana ?" and its passage.
ParsedSentence TelanganaQuestion();
Document TelanganaDocument();

struct HeadwordCase {
  ParsedSentence question;
  std::string expected;
};
// The three worked headword examples plus the four bold-list questions.
std::vector<HeadwordCase> HeadwordGoldenCases();

// "Who founded <Org> ?" instances whose gold document states the founder
// verbatim, mixed with entity-free distractors.
Dataset SyntheticFounderDataset(size_t n);

// Reference tallies: correct-answer percentages on WebQ, TREC and KBC with the
// expected relevance bucket.
struct ReferenceTallyRow {
  std::string feature;
  int webq = 0;
  int trec = 0;
  int kbc = 0;
  int printed_bucket = 0;
};
std::vector<ReferenceTallyRow> ReferenceTallyRows();

// Instances carrying only an id; enough for split and fold checks.
Dataset IdOnlyDataset(size_t n, const std::string& name = "ids");

}  // namespace testing
}  // namespace qafeat

#endif  // QAFEAT_TESTS_FIXTURES_H_
