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

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "qafeat/corpus.h"
#include "qafeat/error.h"
#include "qafeat/resources.h"
#include "text_util.h"

namespace qafeat {

namespace {

using nlohmann::json;

const json& RequireField(const json& obj, const char* field, int line_no) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) {
    throw Error(ErrorCode::kMissingField, "line " + std::to_string(line_no) +
                                              ": missing field '" + field + "'");
  }
  return *it;
}

std::string RequireString(const json& obj, const char* field, int line_no) {
  const json& value = RequireField(obj, field, line_no);
  if (!value.is_string()) {
    throw Error(ErrorCode::kMissingField, "line " + std::to_string(line_no) +
                                              ": field '" + field +
                                              "' must be a string");
  }
  return value.get<std::string>();
}

// Uniform draw from [0, bound) without modulo bias.
uint64_t Draw(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Dataset Subset(const Dataset& dataset, std::vector<size_t> indices,
               const std::string& suffix) {
  std::sort(indices.begin(), indices.end());
  Dataset out;
  out.name = dataset.name + suffix;
  out.instances.reserve(indices.size());
  for (size_t i : indices) out.instances.push_back(dataset.instances[i]);
  return out;
}

}  // namespace

Dataset ParseDatasetJsonl(std::string_view jsonl, const std::string& name,
                          const std::string& base_dir) {
  Dataset dataset;
  dataset.name = name;
  std::set<std::string> seen;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(jsonl)) {
    ++line_no;
    if (internal::Trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!record.is_object()) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected an object");
    }

    QAInstance instance;
    instance.id = RequireString(record, "id", line_no);
    if (!seen.insert(instance.id).second) {
      throw Error(ErrorCode::kDuplicateId, "line " + std::to_string(line_no) +
                                               ": duplicate id '" +
                                               instance.id + "'");
    }
    instance.gold_answer = RequireString(record, "answer", line_no);
    if (internal::Trim(instance.gold_answer).empty()) {
      throw Error(ErrorCode::kMissingField,
                  "line " + std::to_string(line_no) + ": empty 'answer'");
    }

    std::vector<ParsedSentence> question =
        ParseConllu(RequireString(record, "question_conllu", line_no));
    if (question.size() != 1) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) +
                      ": question_conllu must hold exactly one sentence, found " +
                      std::to_string(question.size()));
    }
    instance.question = std::move(question.front());

    if (auto it = record.find("options"); it != record.end() && !it->is_null()) {
      for (const json& option : *it) instance.options.push_back(option.get<std::string>());
    }

    const json& documents = RequireField(record, "documents", line_no);
    if (!documents.is_array()) {
      throw Error(ErrorCode::kMissingField, "line " + std::to_string(line_no) +
                                                ": 'documents' must be an array");
    }
    for (const json& doc : documents) {
      Document document;
      document.doc_id = RequireString(doc, "doc_id", line_no);
      std::string conllu;
      if (doc.contains("conllu")) {
        conllu = RequireString(doc, "conllu", line_no);
      } else if (doc.contains("conllu_file")) {
        std::filesystem::path path = RequireString(doc, "conllu_file", line_no);
        if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
        conllu = ReadFile(path.string());
      } else {
        throw Error(ErrorCode::kMissingField,
                    "line " + std::to_string(line_no) + ": document '" +
                        document.doc_id + "' has neither conllu nor conllu_file");
      }
      document.sentences = ParseConllu(conllu);
      instance.documents.push_back(std::move(document));
    }
    dataset.instances.push_back(std::move(instance));
  }
  return dataset;
}

Dataset LoadDataset(const std::string& path) {
  std::string text = ReadFile(path);
  std::filesystem::path p(path);
  return ParseDatasetJsonl(text, p.stem().string(),
                           p.has_parent_path() ? p.parent_path().string() : ".");
}

std::string DatasetToJsonl(const Dataset& dataset) {
  std::string out;
  for (const QAInstance& instance : dataset.instances) {
    json record = json::object();
    record["id"] = instance.id;
    record["question_conllu"] = SerializeConllu(instance.question);
    record["options"] = instance.options;
    record["answer"] = instance.gold_answer;
    json documents = json::array();
    for (const Document& doc : instance.documents) {
      documents.push_back(
          {{"doc_id", doc.doc_id}, {"conllu", SerializeConllu(doc.sentences)}});
    }
    record["documents"] = std::move(documents);
    out += record.dump();
    out += '\n';
  }
  return out;
}

std::vector<size_t> SeededPermutation(size_t n, uint64_t seed) {
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (size_t i = n; i > 1; --i) {
    size_t j = static_cast<size_t>(Draw(rng, i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

Split SplitHoldout(const Dataset& dataset, uint64_t seed, int64_t fraction_num,
                   int64_t fraction_den) {
  if (fraction_den <= 0 || fraction_num <= 0 || fraction_num >= fraction_den) {
    throw Error(ErrorCode::kBadConfig, "test fraction must lie in (0, 1)");
  }
  const int64_t n = static_cast<int64_t>(dataset.size());
  if (n < 2) {
    throw Error(ErrorCode::kEmptyDataset,
                "holdout split needs at least 2 instances, have " +
                    std::to_string(n));
  }
  // round(n * num / den), halves rounded up, then clamped to [1, n-1].
  int64_t test = (2 * n * fraction_num + fraction_den) / (2 * fraction_den);
  test = std::clamp<int64_t>(test, 1, n - 1);

  std::vector<size_t> order = SeededPermutation(static_cast<size_t>(n), seed);
  std::vector<size_t> test_idx(order.begin(), order.begin() + test);
  std::vector<size_t> train_idx(order.begin() + test, order.end());
  return Split{Subset(dataset, std::move(train_idx), "/train"),
               Subset(dataset, std::move(test_idx), "/test")};
}

std::vector<Split> KFold(const Dataset& dataset, int k, uint64_t seed) {
  const int64_t n = static_cast<int64_t>(dataset.size());
  if (k < 2 || k > n) {
    throw Error(ErrorCode::kBadK, "k must satisfy 2 <= k <= " + std::to_string(n) +
                                      ", got " + std::to_string(k));
  }
  std::vector<size_t> order = SeededPermutation(static_cast<size_t>(n), seed);
  std::vector<std::vector<size_t>> folds(k);
  for (size_t pos = 0; pos < order.size(); ++pos) {
    folds[pos % k].push_back(order[pos]);
  }
  std::vector<Split> splits;
  splits.reserve(k);
  for (int f = 0; f < k; ++f) {
    std::vector<size_t> train;
    for (int g = 0; g < k; ++g) {
      if (g != f) train.insert(train.end(), folds[g].begin(), folds[g].end());
    }
    std::string suffix = "/fold" + std::to_string(f);
    splits.push_back(Split{Subset(dataset, std::move(train), suffix + "/train"),
                           Subset(dataset, folds[f], suffix + "/test")});
  }
  return splits;
}

}  // namespace qafeat
