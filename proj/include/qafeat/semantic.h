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

#ifndef QAFEAT_SEMANTIC_H_
#define QAFEAT_SEMANTIC_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qafeat/corpus.h"
#include "qafeat/feature_vector.h"
#include "qafeat/syntactic.h"

namespace qafeat {

// Word -> hypernym edges with every sense collapsed into one list. Lookups
// are case-insensitive.
class HypernymGraph {
 public:
  HypernymGraph() = default;
  explicit HypernymGraph(std::string source_name)
      : source_name_(std::move(source_name)) {}

  // TSV "word<TAB>hypernym"; '#' comments; duplicate edges and self-edges
  // are dropped.
  static HypernymGraph FromTsv(std::string_view text, std::string source_name);

  void AddEdge(std::string_view word, std::string_view hypernym);
  const std::vector<std::string>& Hypernyms(std::string_view word) const;
  size_t edge_count() const;
  const std::string& source_name() const { return source_name_; }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> edges_;
  std::string source_name_;
};

struct ChainEntry {
  std::string word;
  int depth = 0;

  bool operator==(const ChainEntry&) const = default;
};

// Breadth-first closure from `word` (depth 0) up to max_depth levels. Each
// word appears once, at its minimum depth. Output is ordered by depth, then
// by discovery order. Throws kBadConfig when max_depth < 1.
std::vector<ChainEntry> HypernymChain(const HypernymGraph& graph,
                                      std::string_view word, int max_depth = 6);

struct EntityMention {
  std::string surface;  // tokens joined with '_'
  std::string tag;      // as annotated, e.g. LOCATION
  int begin = 0;        // first token index, 1-based
  int end = 0;          // last token index, inclusive

  std::string Key() const;  // "location:moon_surface"
  bool Contains(int index) const { return index >= begin && index <= end; }
};

// Adjacent tokens with the same non-O tag form one mention.
std::vector<EntityMention> EntityMentions(const ParsedSentence& sentence);

// HH: hypernym chain of the headword (weight 1 each). NE: one entry per
// mention key. HN: the headword token's NE tag when it has one.
FeatureVector ExtractSemantic(const ParsedSentence& question,
                              const HeadwordResult& headword,
                              const HypernymGraph& graph);

// Hypernym root -> NE tag used to type which/what questions.
using CategoryMap = std::map<std::string, std::string>;
// TSV "hypernym<TAB>TAG"; '#' comments.
CategoryMap ParseCategoryMap(std::string_view text);

}  // namespace qafeat

#endif  // QAFEAT_SEMANTIC_H_
