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

#ifndef QAFEAT_SYNTACTIC_H_
#define QAFEAT_SYNTACTIC_H_

#include <string>
#include <string_view>
#include <vector>

#include "qafeat/corpus.h"
#include "qafeat/feature_vector.h"

namespace qafeat {

enum class PosClass { kNounLike, kAny };

// One row of a headword rule table.
//
// deprel_pattern is one of
//   ROOT                      the root token
//   ROOT/l1|l2|...            children of the root whose deprel matches
//   *                         any token, surface order
//   HEAD[w1|w2|...]/l1|...    refinement: if the current headword's lemma
//                             (or surface) is one of w1.., move to its child
//                             with a matching deprel
// A label ending in '*' matches by prefix ("nmod*" matches "nmod:of").
// Selection rules run in priority order until one matches; refinement rules
// then run in priority order, repeatedly, until none applies.
struct HeadwordRule {
  int priority = 0;
  std::string deprel_pattern;
  PosClass pos_class = PosClass::kAny;
  std::string description;
};

using HeadwordRules = std::vector<HeadwordRule>;

// Line format: priority<TAB>deprel_pattern<TAB>pos_class<TAB>description.
// pos_class is NOUN_LIKE or ANY. '#' starts a comment. Priorities must be
// unique (kBadConfig).
HeadwordRules ParseHeadwordRules(std::string_view text);

// Tags with the NN prefix.
bool IsNounTag(std::string_view pos);

struct HeadwordResult {
  Token token;
  // Remaining noun tokens in surface order.
  std::vector<Token> alternates;
};

// Throws kEmptyInput for an empty sentence.
HeadwordResult ExtractHeadword(const ParsedSentence& question,
                               const HeadwordRules& rules);

// TU, PT, HW, HT and FW for a question. Requires a trailing "?".
FeatureVector ExtractSyntactic(const ParsedSentence& question,
                               const HeadwordRules& rules);
FeatureVector ExtractSyntactic(const ParsedSentence& question,
                               const HeadwordResult& headword);

// TU and PT over a token run (shared with document extraction).
FeatureVector ExtractTaggedUnigrams(const std::vector<Token>& tokens);

}  // namespace qafeat

#endif  // QAFEAT_SYNTACTIC_H_
