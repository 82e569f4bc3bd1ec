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

#include "qafeat/structural.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "qafeat/error.h"
#include "qafeat/syntactic.h"
#include "text_util.h"

namespace qafeat {

namespace {

// Path length between two tokens (1-based) through their lowest common
// ancestor.
int TreeDistance(const ParsedSentence& s, int a, int b) {
  std::vector<int> up_a;
  for (int cur = a; cur != 0; cur = s.at(cur).head) up_a.push_back(cur);
  int steps_b = 0;
  for (int cur = b; cur != 0; cur = s.at(cur).head, ++steps_b) {
    auto it = std::find(up_a.begin(), up_a.end(), cur);
    if (it != up_a.end()) return static_cast<int>(it - up_a.begin()) + steps_b;
  }
  // Both reach the artificial root.
  return static_cast<int>(up_a.size()) + steps_b;
}

int ChildCount(const ParsedSentence& s, int index) {
  int n = 0;
  for (const Token& t : s.tokens) n += t.head == index;
  return n;
}

bool InSubtree(const ParsedSentence& s, int node, int root) {
  for (int cur = node; cur != 0; cur = s.at(cur).head) {
    if (cur == root) return true;
  }
  return false;
}

bool ParseIntValue(std::string_view s, int* out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::set<std::string> ParseList(std::string_view value, int line_no) {
  value = internal::Trim(value);
  if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
    throw Error(ErrorCode::kBadConfig, "dp config line " + std::to_string(line_no) +
                                           ": list values use [a, b, c]");
  }
  std::set<std::string> out;
  for (std::string_view item : internal::Split(value.substr(1, value.size() - 2), ',')) {
    item = internal::Trim(item);
    if (!item.empty()) out.emplace(item);
  }
  return out;
}

}  // namespace

Stopwords ParseStopwords(std::string_view text) {
  Stopwords words;
  for (std::string_view line : internal::SplitLines(text)) {
    std::string_view body = internal::Trim(line);
    if (body.empty() || body.front() == '#') continue;
    words.insert(internal::ToLower(body));
  }
  return words;
}

bool IsStopword(const Stopwords& stopwords, std::string_view word) {
  return stopwords.count(internal::ToLower(word)) > 0;
}

std::string DependencyRelation::ToString() const {
  return label + "(" + head_surface + "-" + std::to_string(head_index) + ", " +
         dependent_surface + "-" + std::to_string(dependent_index) + ")";
}

std::string StructuralFeature::Key() const {
  return internal::ToLower(left) + "|" + relation + "|" + internal::ToLower(right);
}

StructuralWeight& StructuralWeight::operator+=(const StructuralWeight& other) {
  weight_dp += other.weight_dp;
  weight_dr += other.weight_dr;
  weight_ner += other.weight_ner;
  total += other.total;
  return *this;
}

bool DpConfig::IsMeaningful(std::string_view label) const {
  std::string l(label);
  if (excluded_labels.count(l)) return false;
  return meaningful_labels.empty() || meaningful_labels.count(l) > 0;
}

DpConfig ParseDpConfig(std::string_view text) {
  DpConfig config;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    std::string_view body = internal::StripComment(line);
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kBadConfig, "dp config line " + std::to_string(line_no) +
                                             ": expected key = value");
    }
    std::string_view key = internal::Trim(body.substr(0, eq));
    std::string_view value = internal::Trim(body.substr(eq + 1));
    auto int_value = [&](int* out) {
      if (!ParseIntValue(value, out) || *out < 0) {
        throw Error(ErrorCode::kBadConfig, "dp config line " +
                                               std::to_string(line_no) + ": " +
                                               std::string(key) +
                                               " needs a non-negative integer");
      }
    };
    if (key == "meaningful_labels") {
      config.meaningful_labels = ParseList(value, line_no);
    } else if (key == "excluded_labels") {
      config.excluded_labels = ParseList(value, line_no);
    } else if (key == "dp3_max_tree_distance") {
      int_value(&config.dp3_max_tree_distance);
    } else if (key == "dp_pass_threshold") {
      int_value(&config.dp_pass_threshold);
      if (config.dp_pass_threshold > 6) {
        throw Error(ErrorCode::kBadConfig, "dp_pass_threshold must be at most 6");
      }
    } else if (key == "dp6_scope") {
      if (value == "features") {
        config.dp6_scope = Dp6Scope::kFeatures;
      } else if (value == "tree") {
        config.dp6_scope = Dp6Scope::kTree;
      } else {
        throw Error(ErrorCode::kBadConfig, "dp6_scope must be features or tree");
      }
    } else {
      throw Error(ErrorCode::kBadConfig, "dp config line " + std::to_string(line_no) +
                                             ": unknown key " + std::string(key));
    }
  }
  return config;
}

std::vector<DependencyRelation> DependencyRelations(const ParsedSentence& sentence) {
  std::vector<DependencyRelation> relations;
  relations.reserve(sentence.size());
  for (const Token& t : sentence.tokens) {
    DependencyRelation r;
    r.label = t.deprel.empty() ? "dep" : t.deprel;
    r.head_index = t.head;
    r.head_surface = t.head == 0 ? "ROOT" : sentence.at(t.head).surface;
    r.dependent_index = t.index;
    r.dependent_surface = t.surface;
    relations.push_back(std::move(r));
  }
  return relations;
}

std::vector<StructuralFeature> Binarize(
    const std::vector<DependencyRelation>& relations, const Stopwords& stopwords) {
  std::vector<StructuralFeature> features;
  for (const DependencyRelation& r : relations) {
    if (r.head_index == 0) continue;
    if (IsStopword(stopwords, r.head_surface) ||
        IsStopword(stopwords, r.dependent_surface)) {
      continue;
    }
    StructuralFeature f;
    f.left = r.head_surface;
    f.right = r.dependent_surface;
    f.relation = r.label;
    f.left_index = r.head_index;
    f.right_index = r.dependent_index;
    f.from_dr = true;
    features.push_back(std::move(f));
  }
  return features;
}

std::vector<StructuralFeature> ApplyDesignPrinciples(
    const std::vector<StructuralFeature>& features, const ParsedSentence& sentence,
    const DpConfig& config, const Stopwords& stopwords) {
  std::vector<StructuralFeature> kept;
  for (const StructuralFeature& f : features) {
    if (config.IsMeaningful(f.relation)) kept.push_back(f);
  }

  for (StructuralFeature& f : kept) {
    const int l = f.left_index;
    const int r = f.right_index;
    DpSet dp;
    dp[0] = true;
    dp[1] = true;
    dp[2] = TreeDistance(sentence, l, r) <= config.dp3_max_tree_distance;

    // DP4: the head branches at least as much as each of its siblings.
    const int parent = sentence.at(l).head;
    const int branches = ChildCount(sentence, l);
    bool widest = true;
    for (const Token& t : sentence.tokens) {
      if (t.head == parent && ChildCount(sentence, t.index) > branches) {
        widest = false;
        break;
      }
    }
    dp[3] = widest;

    dp[4] = IsNounTag(sentence.at(l).pos) || IsNounTag(sentence.at(r).pos);

    // DP6: longest connection of this head, with no unattached stopword
    // between the endpoints.
    const int span = std::abs(l - r);
    bool longest = true;
    if (config.dp6_scope == Dp6Scope::kFeatures) {
      for (const StructuralFeature& other : kept) {
        if (other.left_index == l && std::abs(other.left_index - other.right_index) > span) {
          longest = false;
          break;
        }
      }
    } else {
      for (const Token& t : sentence.tokens) {
        if (t.head == l && std::abs(t.index - l) > span) {
          longest = false;
          break;
        }
      }
    }
    bool clean = true;
    for (int k = std::min(l, r) + 1; k < std::max(l, r); ++k) {
      const Token& t = sentence.at(k);
      if (!IsStopword(stopwords, t.surface)) continue;
      if (t.head == l || t.head == r || InSubtree(sentence, k, r)) continue;
      clean = false;
      break;
    }
    dp[5] = longest && clean;
    f.dp_satisfied = dp;
  }
  return kept;
}

std::vector<StructuralFeature> NerAugment(const std::vector<StructuralFeature>& features,
                                          const std::vector<EntityMention>& mentions) {
  std::vector<StructuralFeature> out = features;
  auto tag_at = [&](int index) -> std::optional<std::string> {
    for (const EntityMention& m : mentions) {
      if (m.Contains(index)) return internal::ToLower(m.tag);
    }
    return std::nullopt;
  };
  for (StructuralFeature& f : out) {
    if (auto right = tag_at(f.right_index)) {
      f.ner_tag = std::move(right);
    } else if (auto left = tag_at(f.left_index)) {
      f.ner_tag = std::move(left);
    }
  }
  return out;
}

bool PassesDp(const StructuralFeature& feature, int threshold) {
  return feature.dp_satisfied[0] && feature.dp_satisfied[1] &&
         static_cast<int>(feature.dp_satisfied.count()) >= threshold;
}

StructuralWeight ComputeStructuralWeight(const std::vector<StructuralFeature>& features,
                                         int dp_pass_threshold) {
  StructuralWeight w;
  for (const StructuralFeature& f : features) {
    w.weight_dp += PassesDp(f, dp_pass_threshold);
    w.weight_dr += f.from_dr;
    w.weight_ner += f.ner_tag.has_value();
  }
  w.total = w.weight_dp + w.weight_dr + w.weight_ner;
  return w;
}

StructuralResult ExtractStructural(const ParsedSentence& sentence,
                                   const Stopwords& stopwords, const DpConfig& config) {
  StructuralResult result;
  std::vector<StructuralFeature> features =
      Binarize(DependencyRelations(sentence), stopwords);
  features = ApplyDesignPrinciples(features, sentence, config, stopwords);
  features = NerAugment(features, EntityMentions(sentence));
  for (const StructuralFeature& f : features) {
    const std::string key = f.Key();
    if (f.from_dr) result.vector.Add(Space::kStructuralDr, key, Rational(1));
    if (PassesDp(f, config.dp_pass_threshold)) {
      result.vector.Add(Space::kStructuralDp, key, Rational(1));
    }
    if (f.ner_tag) {
      result.vector.Add(Space::kStructuralNer, key + "|" + *f.ner_tag, Rational(1));
    }
  }
  result.weight = ComputeStructuralWeight(features, config.dp_pass_threshold);
  result.features = std::move(features);
  return result;
}

}  // namespace qafeat
