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

#include "qafeat/semantic.h"

#include <algorithm>
#include <deque>
#include <set>

#include "qafeat/error.h"
#include "text_util.h"

namespace qafeat {

HypernymGraph HypernymGraph::FromTsv(std::string_view text,
                                     std::string source_name) {
  HypernymGraph graph(std::move(source_name));
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    std::string_view body = internal::StripComment(line);
    if (body.empty()) continue;
    std::vector<std::string_view> cols = internal::Split(body, '\t');
    if (cols.size() != 2) {
      throw Error(ErrorCode::kBadConfig, graph.source_name_ + " line " +
                                             std::to_string(line_no) +
                                             ": expected word<TAB>hypernym");
    }
    graph.AddEdge(internal::Trim(cols[0]), internal::Trim(cols[1]));
  }
  return graph;
}

void HypernymGraph::AddEdge(std::string_view word, std::string_view hypernym) {
  std::string from = internal::ToLower(word);
  std::string to = internal::ToLower(hypernym);
  if (from.empty() || to.empty() || from == to) return;
  std::vector<std::string>& targets = edges_[from];
  if (std::find(targets.begin(), targets.end(), to) == targets.end()) {
    targets.push_back(std::move(to));
  }
}

const std::vector<std::string>& HypernymGraph::Hypernyms(
    std::string_view word) const {
  static const std::vector<std::string> kNone;
  auto it = edges_.find(internal::ToLower(word));
  return it == edges_.end() ? kNone : it->second;
}

size_t HypernymGraph::edge_count() const {
  size_t n = 0;
  for (const auto& entry : edges_) n += entry.second.size();
  return n;
}

std::vector<ChainEntry> HypernymChain(const HypernymGraph& graph,
                                      std::string_view word, int max_depth) {
  if (max_depth < 1) {
    throw Error(ErrorCode::kBadConfig, "max_depth must be at least 1");
  }
  std::string seed = internal::ToLower(word);
  std::vector<ChainEntry> chain{{seed, 0}};
  std::set<std::string> seen{seed};
  std::deque<ChainEntry> queue{{seed, 0}};
  while (!queue.empty()) {
    ChainEntry cur = queue.front();
    queue.pop_front();
    if (cur.depth >= max_depth) continue;
    for (const std::string& up : graph.Hypernyms(cur.word)) {
      if (!seen.insert(up).second) continue;
      chain.push_back({up, cur.depth + 1});
      queue.push_back({up, cur.depth + 1});
    }
  }
  return chain;
}

std::string EntityMention::Key() const {
  return internal::ToLower(tag) + ":" + internal::ToLower(surface);
}

std::vector<EntityMention> EntityMentions(const ParsedSentence& sentence) {
  std::vector<EntityMention> mentions;
  for (const Token& t : sentence.tokens) {
    if (t.ner.empty() || t.ner == "O") continue;
    if (!mentions.empty() && mentions.back().end == t.index - 1 &&
        mentions.back().tag == t.ner) {
      mentions.back().surface += "_" + t.surface;
      mentions.back().end = t.index;
      continue;
    }
    mentions.push_back({t.surface, t.ner, t.index, t.index});
  }
  return mentions;
}

FeatureVector ExtractSemantic(const ParsedSentence& question,
                              const HeadwordResult& headword,
                              const HypernymGraph& graph) {
  FeatureVector out;
  for (const ChainEntry& e : HypernymChain(graph, headword.token.surface)) {
    out.Set({Space::kHypernym, e.word}, Rational(1));
  }
  for (const EntityMention& m : EntityMentions(question)) {
    out.Set({Space::kNamedEntity, m.Key()}, Rational(1));
  }
  const std::string& tag = headword.token.ner;
  if (!tag.empty() && tag != "O") {
    out.Set({Space::kHeadwordEntity, internal::ToLower(tag)}, Rational(1));
  }
  return out;
}

CategoryMap ParseCategoryMap(std::string_view text) {
  CategoryMap map;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    std::string_view body = internal::StripComment(line);
    if (body.empty()) continue;
    std::vector<std::string_view> cols = internal::Split(body, '\t');
    if (cols.size() != 2) {
      throw Error(ErrorCode::kBadConfig, "category map line " +
                                             std::to_string(line_no) +
                                             ": expected hypernym<TAB>TAG");
    }
    map[internal::ToLower(internal::Trim(cols[0]))] =
        internal::ToUpper(internal::Trim(cols[1]));
  }
  return map;
}

}  // namespace qafeat
