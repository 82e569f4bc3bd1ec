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

#include "qafeat/feature_vector.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "qafeat/error.h"

namespace qafeat {

namespace {

constexpr std::string_view kSpaceNames[] = {
    "UN", "BI", "TR", "WW", "WS", "QL", "TU", "PT", "HW",
    "HT", "FW", "HH", "NE", "HN", "ST_DP", "ST_DR", "ST_NER",
};

}  // namespace

double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

double Round12(double value) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string_view SpaceName(Space space) {
  return kSpaceNames[static_cast<int>(space)];
}

std::optional<Space> SpaceFromName(std::string_view name) {
  for (Space s : kAllSpaces) {
    if (SpaceName(s) == name) return s;
  }
  return std::nullopt;
}

std::string FeatureKey::ToString() const {
  std::string out(SpaceName(space));
  out += ':';
  out += name;
  return out;
}

void FeatureVector::Add(const FeatureKey& key, const Rational& weight) {
  if (weight < Rational(0)) {
    throw Error(ErrorCode::kNegativeInput,
                "negative weight for feature " + key.ToString());
  }
  if (weight == Rational(0)) return;
  entries_[key] += weight;
}

void FeatureVector::Set(const FeatureKey& key, const Rational& weight) {
  if (weight < Rational(0)) {
    throw Error(ErrorCode::kNegativeInput,
                "negative weight for feature " + key.ToString());
  }
  if (weight == Rational(0)) {
    entries_.erase(key);
  } else {
    entries_[key] = weight;
  }
}

Rational FeatureVector::Get(const FeatureKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Rational(0) : it->second;
}

bool FeatureVector::Contains(const FeatureKey& key) const {
  return entries_.count(key) > 0;
}

void FeatureVector::Merge(const FeatureVector& other) {
  for (const auto& [key, weight] : other.entries_) Add(key, weight);
}

FeatureVector FeatureVector::Restrict(Space space) const {
  FeatureVector out;
  for (const auto& [key, weight] : entries_) {
    if (key.space == space) out.entries_.emplace(key, weight);
  }
  return out;
}

std::vector<std::string> FeatureVector::Names(Space space) const {
  std::vector<std::string> names;
  for (const auto& [key, weight] : entries_) {
    if (key.space == space) names.push_back(key.name);
  }
  return names;
}

size_t FeatureVector::CountIn(Space space) const {
  size_t n = 0;
  for (const auto& entry : entries_) n += entry.first.space == space;
  return n;
}

Rational FeatureVector::SumIn(Space space) const {
  Rational sum(0);
  for (const auto& [key, weight] : entries_) {
    if (key.space == space) sum += weight;
  }
  return sum;
}

nlohmann::json FeatureVector::ToJson() const {
  // nlohmann::json objects keep keys sorted.
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, weight] : entries_) {
    out[key.ToString()] = Round12(ToDouble(weight));
  }
  return out;
}

}  // namespace qafeat
