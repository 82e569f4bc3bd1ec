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

#ifndef QAFEAT_STRUCTURAL_H_
#define QAFEAT_STRUCTURAL_H_

#include <bitset>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "qafeat/corpus.h"
#include "qafeat/feature_vector.h"
#include "qafeat/semantic.h"

namespace qafeat {

using Stopwords = std::unordered_set<std::string>;

// One word per line, '#' comments, stored lowercased.
Stopwords ParseStopwords(std::string_view text);
bool IsStopword(const Stopwords& stopwords, std::string_view word);

struct DependencyRelation {
  std::string label;
  std::string head_surface;  // "ROOT" for the root relation
  int head_index = 0;
  std::string dependent_surface;
  int dependent_index = 0;

  // "label(head-i, dependent-j)"
  std::string ToString() const;
  bool operator==(const DependencyRelation&) const = default;
};

// Design principles DP1..DP6; bit i holds DP(i+1).
using DpSet = std::bitset<6>;

struct StructuralFeature {
  std::string left;   // head surface
  std::string right;  // dependent surface
  std::string relation;
  int left_index = 0;
  int right_index = 0;
  DpSet dp_satisfied;
  bool from_dr = false;
  std::optional<std::string> ner_tag;  // lowercased

  // "left|relation|right", lowercased.
  std::string Key() const;
  bool operator==(const StructuralFeature&) const = default;
};

struct StructuralWeight {
  int64_t weight_dp = 0;
  int64_t weight_dr = 0;
  int64_t weight_ner = 0;
  int64_t total = 0;

  StructuralWeight& operator+=(const StructuralWeight& other);
  bool operator==(const StructuralWeight&) const = default;
};

enum class Dp6Scope { kFeatures, kTree };

struct DpConfig {
  // When non-empty only these labels are meaningful (DP2).
  std::set<std::string> meaningful_labels;
  // Labels that never satisfy DP2.
  std::set<std::string> excluded_labels = {"punct", "det", "case", "aux",
                                           "auxpass", "cop", "mark", "expl"};
  int dp3_max_tree_distance = 2;
  Dp6Scope dp6_scope = Dp6Scope::kFeatures;
  // Principles a feature must satisfy (DP1 and DP2 included) to count
  // towards weight_dp.
  int dp_pass_threshold = 4;

  bool IsMeaningful(std::string_view label) const;
};

// Flat "key = value" lines; lists as "[a, b, c]"; '#' comments.
// Keys: meaningful_labels, excluded_labels, dp3_max_tree_distance,
// dp6_scope (features|tree), dp_pass_threshold. Unknown keys throw
// kBadConfig.
DpConfig ParseDpConfig(std::string_view text);

// One relation per token, including root(ROOT-0, x).
std::vector<DependencyRelation> DependencyRelations(
    const ParsedSentence& sentence);

// Drops the root relation and any relation with a stopword endpoint.
std::vector<StructuralFeature> Binarize(
    const std::vector<DependencyRelation>& relations,
    const Stopwords& stopwords);

// Sets dp_satisfied on every feature and removes those failing DP2.
// DP6 checks for stopwords between the endpoints, so it takes the list.
std::vector<StructuralFeature> ApplyDesignPrinciples(
    const std::vector<StructuralFeature>& features,
    const ParsedSentence& sentence, const DpConfig& config,
    const Stopwords& stopwords);

// Tags endpoints that fall inside a mention; the dependent's tag wins when
// both endpoints are tagged.
std::vector<StructuralFeature> NerAugment(
    const std::vector<StructuralFeature>& features,
    const std::vector<EntityMention>& mentions);

bool PassesDp(const StructuralFeature& feature, int threshold);

StructuralWeight ComputeStructuralWeight(
    const std::vector<StructuralFeature>& features, int dp_pass_threshold = 4);

struct StructuralResult {
  FeatureVector vector;  // ST_DR, ST_DP, ST_NER
  StructuralWeight weight;
  std::vector<StructuralFeature> features;
};

StructuralResult ExtractStructural(const ParsedSentence& sentence,
                                   const Stopwords& stopwords,
                                   const DpConfig& config);

}  // namespace qafeat

#endif  // QAFEAT_STRUCTURAL_H_
