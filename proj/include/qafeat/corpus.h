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

#ifndef QAFEAT_CORPUS_H_
#define QAFEAT_CORPUS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qafeat {

// One CoNLL-U token row. Indices are 1-based; head 0 marks the root.
struct Token {
  int index = 0;
  std::string surface;
  std::string lemma;
  std::string pos;  // PTB tag (XPOS column)
  int head = 0;
  std::string deprel;
  std::string ner = "O";

  bool operator==(const Token&) const = default;
};

struct ParsedSentence {
  std::vector<Token> tokens;
  std::string text;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  // 1-based access.
  const Token& at(int index) const { return tokens.at(index - 1); }
  // Index of the token attached to the artificial root.
  int root() const;

  bool operator==(const ParsedSentence&) const = default;
};

struct Document {
  std::string doc_id;
  std::vector<ParsedSentence> sentences;

  bool operator==(const Document&) const = default;
};

struct QAInstance {
  std::string id;
  ParsedSentence question;
  std::vector<std::string> options;
  std::string gold_answer;
  std::vector<Document> documents;

  bool operator==(const QAInstance&) const = default;
};

struct Dataset {
  std::string name;
  std::vector<QAInstance> instances;

  size_t size() const { return instances.size(); }
};

// ---------------------------------------------------------------------------
// CoNLL-U

// Parses a CoNLL-U stream. Blank lines separate sentences, '#' lines are
// comments ("# text = ..." fills ParsedSentence::text), multiword ranges and
// empty nodes are skipped. The PTB tag is read from XPOS (UPOS when XPOS is
// '_'); the NE tag from a MISC entry "NER=<tag>", defaulting to "O".
// Throws Error{kMalformedLine, kBadIndex, kNonTree}.
std::vector<ParsedSentence> ParseConllu(std::string_view text);

// Inverse of ParseConllu for the fields a ParsedSentence carries.
std::string SerializeConllu(const ParsedSentence& sentence);
std::string SerializeConllu(const std::vector<ParsedSentence>& sentences);

// Checks index contiguity, head range and tree shape. `ordinal` is the
// 1-based sentence number used in error messages.
void ValidateSentence(const ParsedSentence& sentence, int ordinal = 1);

// ---------------------------------------------------------------------------
// Datasets

// Loads a JSONL dataset. Each line holds `id`, `question_conllu`, `answer`,
// `documents` (array of {doc_id, conllu} or {doc_id, conllu_file}) and an
// optional `options` array. Sidecar paths resolve relative to the dataset
// file. Throws Error{kIoFailure, kMissingField, kDuplicateId, ...}.
Dataset LoadDataset(const std::string& path);
Dataset ParseDatasetJsonl(std::string_view jsonl, const std::string& name,
                          const std::string& base_dir = ".");
std::string DatasetToJsonl(const Dataset& dataset);

struct Split {
  Dataset train;
  Dataset test;
};

// Fraction given as numerator / denominator. Deterministic in (order, seed).
Split SplitHoldout(const Dataset& dataset, uint64_t seed,
                   int64_t fraction_num = 1, int64_t fraction_den = 10);

// Shuffle once, deal round-robin into k test folds. Each part keeps the
// dataset order of its members.
std::vector<Split> KFold(const Dataset& dataset, int k, uint64_t seed);

// Seeded permutation of [0, n): Fisher-Yates driven by std::mt19937_64 with
// rejection sampling, so the order is identical on every platform.
std::vector<size_t> SeededPermutation(size_t n, uint64_t seed);

}  // namespace qafeat

#endif  // QAFEAT_CORPUS_H_
