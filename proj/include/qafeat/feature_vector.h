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

#ifndef QAFEAT_FEATURE_VECTOR_H_
#define QAFEAT_FEATURE_VECTOR_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"

namespace qafeat {

using Rational = boost::rational<int64_t>;

double ToDouble(const Rational& r);
// Rounds to 12 significant digits, the precision used in every JSON output.
double Round12(double value);

// Feature namespaces. Each extractor writes into a fixed subset.
enum class Space {
  kUnigram,        // UN
  kBigram,         // BI
  kTrigram,        // TR
  kWhWord,         // WW
  kWordShape,      // WS
  kQuestionLength, // QL
  kTaggedUnigram,  // TU
  kPosTag,         // PT
  kHeadword,       // HW
  kHeadwordTag,    // HT
  kFocusWord,      // FW
  kHypernym,       // HH
  kNamedEntity,    // NE
  kHeadwordEntity, // HN
  kStructuralDp,   // ST_DP
  kStructuralDr,   // ST_DR
  kStructuralNer,  // ST_NER
};

inline constexpr Space kAllSpaces[] = {
    Space::kUnigram,       Space::kBigram,         Space::kTrigram,
    Space::kWhWord,        Space::kWordShape,      Space::kQuestionLength,
    Space::kTaggedUnigram, Space::kPosTag,         Space::kHeadword,
    Space::kHeadwordTag,   Space::kFocusWord,      Space::kHypernym,
    Space::kNamedEntity,   Space::kHeadwordEntity, Space::kStructuralDp,
    Space::kStructuralDr,  Space::kStructuralNer,
};

std::string_view SpaceName(Space space);
std::optional<Space> SpaceFromName(std::string_view name);

struct FeatureKey {
  Space space;
  std::string name;

  std::string ToString() const;  // "SPACE:name"
  auto operator<=>(const FeatureKey&) const = default;
};

// Sparse map from feature keys to non-negative exact weights. Zero-valued
// entries are never stored.
class FeatureVector {
 public:
  using Map = std::map<FeatureKey, Rational>;

  // Adds `weight` to the entry. Negative weights throw kNegativeInput; a
  // resulting zero removes the entry.
  void Add(const FeatureKey& key, const Rational& weight);
  void Add(Space space, std::string name, const Rational& weight) {
    Add(FeatureKey{space, std::move(name)}, weight);
  }
  void Set(const FeatureKey& key, const Rational& weight);

  Rational Get(const FeatureKey& key) const;
  bool Contains(const FeatureKey& key) const;

  // Adds every entry of `other`.
  void Merge(const FeatureVector& other);
  FeatureVector Restrict(Space space) const;
  std::vector<std::string> Names(Space space) const;
  size_t CountIn(Space space) const;
  Rational SumIn(Space space) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  // {"SPACE:name": weight, ...}; keys sorted, weights to 12 significant digits.
  nlohmann::json ToJson() const;

  bool operator==(const FeatureVector&) const = default;

 private:
  Map entries_;
};

}  // namespace qafeat

#endif  // QAFEAT_FEATURE_VECTOR_H_
