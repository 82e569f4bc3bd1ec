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

#include "fixtures.h"

#include <algorithm>
#include <cctype>

#include "qafeat/resources.h"

namespace qafeat {
namespace testing {

std::string DataPath(const std::string& name) {
  return std::string(QAFEAT_TEST_DATA_DIR) + "/" + name;
}

std::string ReadDataFile(const std::string& name) { return ReadFile(DataPath(name)); }

ParsedSentence MakeSentence(const std::vector<Row>& rows) {
  ParsedSentence s;
  for (size_t i = 0; i < rows.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i + 1);
    t.surface = rows[i].surface;
    t.lemma = t.surface;
    std::transform(t.lemma.begin(), t.lemma.end(), t.lemma.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    t.pos = rows[i].pos;
    t.head = rows[i].head;
    t.deprel = rows[i].deprel;
    t.ner = rows[i].ner;
    if (!s.text.empty()) s.text += ' ';
    s.text += t.surface;
    s.tokens.push_back(std::move(t));
  }
  return s;
}

ParsedSentence TelanganaQuestion() {
  return ParseConllu(ReadDataFile("telangana_question.conllu")).at(0);
}

Document TelanganaDocument() {
  return {"d1", ParseConllu(ReadDataFile("telangana_document.conllu"))};
}

std::vector<HeadwordCase> HeadwordGoldenCases() {
  std::vector<HeadwordCase> cases;
  cases.push_back({MakeSentence({{"Which", "WDT", 2, "attr"},
                                 {"is", "VBZ", 0, "root"},
                                 {"the", "DT", 6, "det"},
                                 {"newly", "RB", 5, "advmod"},
                                 {"formed", "VBN", 6, "amod"},
                                 {"state", "NN", 2, "nsubj"},
                                 {"of", "IN", 8, "case"},
                                 {"India", "NNP", 6, "nmod:of", "LOCATION"},
                                 {"?", ".", 2, "punct"}}),
                   "state"});
  const ParsedSentence moon = MakeSentence({{"Who", "WP", 2, "attr"},
                                            {"was", "VBD", 0, "root"},
                                            {"the", "DT", 5, "det"},
                                            {"first", "JJ", 5, "amod"},
                                            {"man", "NN", 2, "nsubj"},
                                            {"to", "TO", 7, "mark"},
                                            {"reach", "VB", 5, "acl"},
                                            {"at", "IN", 10, "case"},
                                            {"the", "DT", 10, "det"},
                                            {"moon", "NN", 7, "nmod:at"},
                                            {"?", ".", 2, "punct"}});
  cases.push_back({moon, "man"});
  cases.push_back({MakeSentence({{"What", "WP", 2, "attr"},
                                 {"is", "VBZ", 0, "root"},
                                 {"the", "DT", 6, "det"},
                                 {"most", "RBS", 5, "advmod"},
                                 {"populated", "JJ", 6, "amod"},
                                 {"city", "NN", 2, "nsubj"},
                                 {"in", "IN", 8, "case"},
                                 {"India", "NNP", 6, "nmod:in", "LOCATION"},
                                 {"?", ".", 2, "punct"}}),
                   "city"});
  cases.push_back({MakeSentence({{"What", "WP", 2, "attr"},
                                 {"is", "VBZ", 0, "root"},
                                 {"the", "DT", 5, "det"},
                                 {"nation", "NN", 5, "compound"},
                                 {"flower", "NN", 2, "nsubj"},
                                 {"of", "IN", 7, "case"},
                                 {"India", "NNP", 5, "nmod:of", "LOCATION"},
                                 {"?", ".", 2, "punct"}}),
                   "flower"});
  cases.push_back({MakeSentence({{"What", "WP", 2, "attr"},
                                 {"is", "VBZ", 0, "root"},
                                 {"the", "DT", 4, "det"},
                                 {"name", "NN", 2, "nsubj"},
                                 {"of", "IN", 7, "case"},
                                 {"the", "DT", 7, "det"},
                                 {"company", "NN", 4, "nmod:of"},
                                 {"launched", "VBD", 7, "acl"},
                                 {"JIO", "NNP", 10, "compound", "ORGANIZATION"},
                                 {"4G", "NNP", 8, "dobj"},
                                 {"in", "IN", 12, "case"},
                                 {"2016", "CD", 8, "nmod:in", "DATE"},
                                 {"?", ".", 2, "punct"}}),
                   "company"});
  cases.push_back({MakeSentence({{"What", "WP", 2, "attr"},
                                 {"is", "VBZ", 0, "root"},
                                 {"the", "DT", 4, "det"},
                                 {"name", "NN", 2, "nsubj"},
                                 {"of", "IN", 10, "case"},
                                 {"world", "NN", 10, "nmod:poss"},
                                 {"'s", "POS", 6, "case"},
                                 {"second", "JJ", 10, "amod"},
                                 {"longest", "JJS", 10, "amod"},
                                 {"river", "NN", 4, "nmod:of"},
                                 {"?", ".", 2, "punct"}}),
                   "river"});
  cases.push_back({moon, "man"});
  return cases;
}

Dataset SyntheticFounderDataset(size_t n) {
  static const char* const kFirst[] = {"Asha", "Bruno", "Chen", "Dara", "Elif",
                                       "Farid", "Gita"};
  static const char* const kLast[] = {"Rao", "Silva", "Wang", "Okafor", "Yilmaz"};
  static const char* const kOrgStem[] = {"Acme", "Borealis", "Cygnus", "Delta",
                                         "Ember"};
  Dataset ds;
  ds.name = "synthetic";
  for (size_t i = 0; i < n; ++i) {
    const std::string first = kFirst[i % 7];
    const std::string last = kLast[(i / 7) % 5];
    const std::string org = std::string(kOrgStem[i % 5]) + "Corp" + std::to_string(i);

    QAInstance inst;
    inst.id = "syn-" + std::to_string(i);
    inst.question = MakeSentence({{"Who", "WP", 2, "nsubj"},
                                  {"founded", "VBD", 0, "root"},
                                  {org, "NNP", 2, "dobj", "ORGANIZATION"},
                                  {"?", ".", 2, "punct"}});
    inst.gold_answer = first + " " + last;

    Document gold{"gold", {MakeSentence({{first, "NNP", 2, "compound", "PERSON"},
                                         {last, "NNP", 3, "nsubj", "PERSON"},
                                         {"founded", "VBD", 0, "root"},
                                         {org, "NNP", 3, "dobj", "ORGANIZATION"},
                                         {"in", "IN", 6, "case"},
                                         {"1999", "CD", 3, "nmod:in"},
                                         {".", ".", 3, "punct"}})}};
    Document weather{"weather", {MakeSentence({{"The", "DT", 2, "det"},
                                               {"weather", "NN", 4, "nsubj"},
                                               {"was", "VBD", 4, "cop"},
                                               {"mild", "JJ", 0, "root"},
                                               {"in", "IN", 6, "case"},
                                               {"spring", "NN", 4, "nmod:in"},
                                               {".", ".", 4, "punct"}})}};
    Document river{"river", {MakeSentence({{"Rivers", "NNS", 2, "nsubj"},
                                           {"flow", "VBP", 0, "root"},
                                           {"to", "TO", 4, "case"},
                                           {"seas", "NNS", 2, "nmod:to"},
                                           {".", ".", 2, "punct"}})}};
    std::vector<Document> docs = {std::move(weather), std::move(river)};
    docs.insert(docs.begin() + static_cast<long>(i % 3), std::move(gold));
    inst.documents = std::move(docs);
    ds.instances.push_back(std::move(inst));
  }
  return ds;
}

std::vector<ReferenceTallyRow> ReferenceTallyRows() {
  return {{"Unigrams", 61, 63, 67, 4},        {"Bigrams", 82, 79, 88, 5},
          {"Trigrams", 58, 55, 52, 3},        {"Wh-word", 48, 35, 32, 3},
          {"Word Shape", 51, 43, 48, 3},      {"Question Length", 28, 23, 19, 2},
          {"Tagged Unigram", 43, 42, 46, 3},  {"POS tags", 46, 51, 56, 3},
          {"Headword", 87, 88, 91, 5},        {"Headword Tag", 62, 58, 52, 4},
          {"Focus Word", 76, 72, 80, 4},      {"HW Hypernyms", 66, 54, 63, 4},
          {"Named Entity", 83, 82, 77, 5},    {"Headword NE", 57, 52, 49, 3},
          {"St with DP", 56, 61, 65, 4},      {"St with DR", 67, 68, 72, 4},
          {"St with NER", 92, 88, 91, 4}};
}

Dataset IdOnlyDataset(size_t n, const std::string& name) {
  Dataset ds;
  ds.name = name;
  for (size_t i = 0; i < n; ++i) {
    QAInstance inst;
    inst.id = "q" + std::to_string(i);
    ds.instances.push_back(std::move(inst));
  }
  return ds;
}

}  // namespace testing
}  // namespace qafeat
