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

#include "qafeat/pipeline.h"

#include <algorithm>

#include "qafeat/error.h"
#include "qafeat/lexical.h"
#include "text_util.h"

namespace qafeat {

QuestionFeatures ExtractQuestionFeatures(const ParsedSentence& question,
                                         const Resources& resources) {
  QuestionFeatures q;
  q.headword = ExtractHeadword(question, resources.headword_rules);
  q.vector = ExtractLexical(question);
  q.vector.Merge(ExtractSyntactic(question, q.headword));
  q.vector.Merge(ExtractSemantic(question, q.headword, resources.lexicon));
  q.structural = ExtractStructural(question, resources.stopwords, resources.dp_config);
  q.vector.Merge(q.structural.vector);
  q.mentions = EntityMentions(question);
  q.length = WordCount(question.tokens);
  return q;
}

std::vector<std::string> WhWordsAnsweredBy(std::string_view tag) {
  const std::string t = internal::ToUpper(tag);
  std::vector<std::string> out;
  if (t.empty() || t == "O") return out;
  for (std::string_view wh : kWhWords) {
    bool ok = false;
    if (wh == "which" || wh == "what") {
      ok = true;
    } else if (wh == "who") {
      ok = t == "PERSON";
    } else if (wh == "where") {
      ok = t == "LOCATION" || t == "GPE";
    } else if (wh == "when") {
      ok = t == "DATE" || t == "TIME";
    } else if (wh == "how") {
      ok = t == "NUMBER" || t == "MONEY" || t == "PERCENT";
    }
    if (ok) out.emplace_back(wh);
  }
  return out;
}

DocumentFeatures ExtractDocumentFeatures(const Document& document,
                                         const Resources& resources) {
  DocumentFeatures d;
  d.doc_id = document.doc_id;
  std::vector<Token> all;
  for (const ParsedSentence& s : document.sentences) {
    all.insert(all.end(), s.tokens.begin(), s.tokens.end());
  }
  if (all.empty()) {
    throw Error(ErrorCode::kEmptyInput, "document " + document.doc_id + " has no tokens");
  }
  d.length = WordCount(all);

  d.vector = ExtractLexicalBody(all);
  if (d.length > 0) d.vector.Set({Space::kQuestionLength, "len"}, Rational(d.length));
  d.vector.Merge(ExtractTaggedUnigrams(all));

  for (size_t i = 0; i < document.sentences.size(); ++i) {
    const ParsedSentence& s = document.sentences[i];
    if (s.empty()) continue;
    for (EntityMention& m : EntityMentions(s)) {
      for (const std::string& wh : WhWordsAnsweredBy(m.tag)) {
        d.vector.Set({Space::kWhWord, wh}, Rational(1));
      }
      d.vector.Set({Space::kNamedEntity, m.Key()}, Rational(1));
      d.mentions.push_back({std::move(m), static_cast<int>(i)});
    }

    HeadwordResult hw = ExtractHeadword(s, resources.headword_rules);
    d.vector.Set({Space::kHeadword, internal::ToLower(hw.token.surface)}, Rational(1));
    d.vector.Set({Space::kHeadwordTag, hw.token.pos.empty() ? "_" : hw.token.pos},
                 Rational(1));
    for (const Token& t : hw.alternates) {
      d.vector.Set({Space::kFocusWord, internal::ToLower(t.surface)}, Rational(1));
    }
    if (hw.token.ner != "O") {
      d.vector.Set({Space::kHeadwordEntity, internal::ToLower(hw.token.ner)}, Rational(1));
    }

    for (const Token& t : s.tokens) {
      if (!IsNounTag(t.pos)) continue;
      for (const ChainEntry& e : HypernymChain(resources.lexicon, t.surface)) {
        d.vector.Set({Space::kHypernym, e.word}, Rational(1));
      }
    }

    StructuralResult st = ExtractStructural(s, resources.stopwords, resources.dp_config);
    d.vector.Merge(st.vector);
    d.structural_weight += st.weight;
  }

  std::vector<std::string> lowered;
  lowered.reserve(all.size());
  for (const Token& t : all) lowered.push_back(internal::ToLower(t.surface));
  d.normalized_text = internal::Join(lowered, " ");
  return d;
}

PairScore ScorePair(const QuestionFeatures& question, const DocumentFeatures& document,
                    const ScoringOptions& options) {
  PairScore out;
  std::vector<Rational> by_category[3];
  for (Space space : kScoredSpaces) {
    if (options.disabled.count(space)) continue;
    SpaceScore entry{space, std::nullopt};
    try {
      entry.score = ScoreOverlap(space, question.vector, document.vector, document.length);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroDenominator) throw;
    }
    if (entry.score) {
      by_category[static_cast<int>(CategoryOf(space))].push_back(entry.score->value());
    }
    out.per_space.push_back(std::move(entry));
  }
  auto average = [](const std::vector<Rational>& v) {
    return v.empty() ? Rational(0) : Mean(v);
  };

  FeatureFormScore& form = out.form;
  form.le = average(by_category[static_cast<int>(Category::kLexical)]);
  form.sy = average(by_category[static_cast<int>(Category::kSyntactic)]);
  form.se = average(by_category[static_cast<int>(Category::kSemantic)]);
  const StructuralWeight& w = document.structural_weight;
  form.st = (options.disabled.count(Space::kStructuralDp) ? 0 : w.weight_dp) +
            (options.disabled.count(Space::kStructuralDr) ? 0 : w.weight_dr) +
            (options.disabled.count(Space::kStructuralNer) ? 0 : w.weight_ner);
  form.mode = options.mode;
  form.ff = FfScore(form.le, form.sy, form.se, form.st, options.mode);
  out.rank_value = options.regression
                       ? options.regression->Predict(
                             {ToDouble(form.le), ToDouble(form.sy), ToDouble(form.se)})
                       : form.ff;
  return out;
}

}  // namespace qafeat
