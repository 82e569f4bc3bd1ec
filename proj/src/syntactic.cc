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

#include "qafeat/syntactic.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "qafeat/error.h"
#include "qafeat/lexical.h"
#include "text_util.h"

namespace qafeat {

namespace {

enum class PatternKind { kRoot, kRootChildren, kAnyToken, kRefine };

struct Pattern {
  PatternKind kind;
  std::vector<std::string> labels;
  std::set<std::string> words;  // kRefine trigger words
};

Pattern ParsePattern(std::string_view text) {
  Pattern p;
  auto labels_of = [](std::string_view s) {
    std::vector<std::string> out;
    for (std::string_view l : internal::Split(s, '|')) {
      l = internal::Trim(l);
      if (!l.empty()) out.emplace_back(l);
    }
    return out;
  };
  if (text == "ROOT") {
    p.kind = PatternKind::kRoot;
  } else if (text == "*") {
    p.kind = PatternKind::kAnyToken;
  } else if (text.substr(0, 5) == "ROOT/") {
    p.kind = PatternKind::kRootChildren;
    p.labels = labels_of(text.substr(5));
  } else if (text.substr(0, 5) == "HEAD[") {
    size_t close = text.find("]/");
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::kBadConfig,
                  "refinement pattern needs HEAD[words]/labels: " + std::string(text));
    }
    p.kind = PatternKind::kRefine;
    for (const std::string& w : labels_of(text.substr(5, close - 5))) {
      p.words.insert(internal::ToLower(w));
    }
    p.labels = labels_of(text.substr(close + 2));
  } else {
    throw Error(ErrorCode::kBadConfig, "unknown headword pattern: " + std::string(text));
  }
  if ((p.kind == PatternKind::kRootChildren || p.kind == PatternKind::kRefine) &&
      p.labels.empty()) {
    throw Error(ErrorCode::kBadConfig, "pattern without labels: " + std::string(text));
  }
  return p;
}

bool LabelMatches(const std::vector<std::string>& labels, std::string_view deprel) {
  for (const std::string& l : labels) {
    if (!l.empty() && l.back() == '*') {
      if (deprel.substr(0, l.size() - 1) == std::string_view(l).substr(0, l.size() - 1)) {
        return true;
      }
    } else if (deprel == l) {
      return true;
    }
  }
  return false;
}

bool PosMatches(PosClass cls, const Token& t) {
  return cls == PosClass::kAny || IsNounTag(t.pos);
}

// Smallest-index child of `head` (0 = root pseudo-node) with a matching
// label and POS class.
const Token* FirstChild(const ParsedSentence& s, int head,
                        const std::vector<std::string>& labels, PosClass cls) {
  for (const Token& t : s.tokens) {
    if (t.head == head && LabelMatches(labels, t.deprel) && PosMatches(cls, t)) {
      return &t;
    }
  }
  return nullptr;
}

const Token* Select(const ParsedSentence& s, const Pattern& p, PosClass cls) {
  switch (p.kind) {
    case PatternKind::kRoot: {
      const Token& root = s.at(s.root());
      return PosMatches(cls, root) ? &root : nullptr;
    }
    case PatternKind::kRootChildren:
      return FirstChild(s, s.root(), p.labels, cls);
    case PatternKind::kAnyToken:
      for (const Token& t : s.tokens) {
        if (!IsPunctuation(t.surface) && PosMatches(cls, t)) return &t;
      }
      return nullptr;
    case PatternKind::kRefine:
      return nullptr;
  }
  return nullptr;
}

}  // namespace

bool IsNounTag(std::string_view pos) { return pos.substr(0, 2) == "NN"; }

HeadwordRules ParseHeadwordRules(std::string_view text) {
  HeadwordRules rules;
  std::set<int> priorities;
  int line_no = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    std::string_view body = internal::Trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string_view> cols = internal::Split(body, '\t');
    if (cols.size() < 3 || cols.size() > 4) {
      throw Error(ErrorCode::kBadConfig,
                  "headword rules line " + std::to_string(line_no) +
                      ": expected priority, pattern, pos_class[, description]");
    }
    HeadwordRule rule;
    std::string_view prio = internal::Trim(cols[0]);
    auto [ptr, ec] = std::from_chars(prio.data(), prio.data() + prio.size(), rule.priority);
    if (ec != std::errc() || ptr != prio.data() + prio.size()) {
      throw Error(ErrorCode::kBadConfig, "headword rules line " +
                                             std::to_string(line_no) +
                                             ": bad priority");
    }
    if (!priorities.insert(rule.priority).second) {
      throw Error(ErrorCode::kBadConfig, "headword rules line " +
                                             std::to_string(line_no) +
                                             ": duplicate priority " +
                                             std::to_string(rule.priority));
    }
    rule.deprel_pattern = std::string(internal::Trim(cols[1]));
    ParsePattern(rule.deprel_pattern);  // validate early
    std::string_view cls = internal::Trim(cols[2]);
    if (cls == "NOUN_LIKE") {
      rule.pos_class = PosClass::kNounLike;
    } else if (cls == "ANY") {
      rule.pos_class = PosClass::kAny;
    } else {
      throw Error(ErrorCode::kBadConfig, "headword rules line " +
                                             std::to_string(line_no) +
                                             ": unknown pos_class " + std::string(cls));
    }
    if (cols.size() == 4) rule.description = std::string(internal::Trim(cols[3]));
    rules.push_back(std::move(rule));
  }
  return rules;
}

HeadwordResult ExtractHeadword(const ParsedSentence& question,
                               const HeadwordRules& rules) {
  if (question.empty()) throw Error(ErrorCode::kEmptyInput, "empty question");

  std::vector<std::pair<const HeadwordRule*, Pattern>> ordered;
  for (const HeadwordRule& r : rules) {
    ordered.emplace_back(&r, ParsePattern(r.deprel_pattern));
  }
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return a.first->priority < b.first->priority;
  });

  const Token* head = nullptr;
  for (const auto& [rule, pattern] : ordered) {
    if (pattern.kind == PatternKind::kRefine) continue;
    head = Select(question, pattern, rule->pos_class);
    if (head != nullptr) break;
  }
  if (head == nullptr) head = &question.at(question.root());

  // Each refinement step moves strictly down the tree, so at most n steps.
  for (size_t step = 0; step < question.size(); ++step) {
    const Token* next = nullptr;
    for (const auto& [rule, pattern] : ordered) {
      if (pattern.kind != PatternKind::kRefine) continue;
      if (!pattern.words.count(internal::ToLower(head->lemma)) &&
          !pattern.words.count(internal::ToLower(head->surface))) {
        continue;
      }
      next = FirstChild(question, head->index, pattern.labels, rule->pos_class);
      if (next != nullptr) break;
    }
    if (next == nullptr) break;
    head = next;
  }

  HeadwordResult result;
  result.token = *head;
  for (const Token& t : question.tokens) {
    if (t.index != head->index && IsNounTag(t.pos)) result.alternates.push_back(t);
  }
  return result;
}

FeatureVector ExtractTaggedUnigrams(const std::vector<Token>& tokens) {
  FeatureVector out;
  if (tokens.empty()) return out;
  const int64_t dl = static_cast<int64_t>(tokens.size());
  for (const Token& t : tokens) {
    const std::string tag = t.pos.empty() ? "_" : t.pos;
    out.Add(Space::kPosTag, tag, Rational(1));
    if (IsPunctuation(t.surface)) continue;
    out.Add(Space::kTaggedUnigram, internal::ToLower(t.surface) + "/" + tag,
            Rational(1, dl));
  }
  return out;
}

FeatureVector ExtractSyntactic(const ParsedSentence& question,
                               const HeadwordResult& headword) {
  if (question.empty()) throw Error(ErrorCode::kEmptyInput, "empty question");
  if (question.tokens.back().surface != "?") {
    throw Error(ErrorCode::kNotAQuestion,
                "question does not end with '?': " + question.text);
  }
  FeatureVector out = ExtractTaggedUnigrams(question.tokens);
  out.Set({Space::kHeadword, internal::ToLower(headword.token.surface)}, Rational(1));
  out.Set({Space::kHeadwordTag, headword.token.pos.empty() ? "_" : headword.token.pos},
          Rational(1));
  for (const Token& t : headword.alternates) {
    out.Set({Space::kFocusWord, internal::ToLower(t.surface)}, Rational(1));
  }
  return out;
}

FeatureVector ExtractSyntactic(const ParsedSentence& question,
                               const HeadwordRules& rules) {
  if (question.empty()) throw Error(ErrorCode::kEmptyInput, "empty question");
  return ExtractSyntactic(question, ExtractHeadword(question, rules));
}

}  // namespace qafeat
