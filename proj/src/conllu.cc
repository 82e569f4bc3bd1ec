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

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "qafeat/corpus.h"
#include "qafeat/error.h"
#include "text_util.h"

namespace qafeat {

namespace {

constexpr size_t kColumns = 10;

bool ParseInt(std::string_view s, int* value) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

std::string Field(std::string_view s) {
  return s == "_" ? std::string() : std::string(s);
}

std::string NerFromMisc(std::string_view misc) {
  if (misc == "_") return "O";
  for (std::string_view item : internal::Split(misc, '|')) {
    if (item.substr(0, 4) == "NER=" && item.size() > 4) {
      return std::string(item.substr(4));
    }
  }
  return "O";
}

std::string LineError(int line_no, std::string_view what) {
  std::ostringstream os;
  os << "line " << line_no << ": " << what;
  return os.str();
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kNonTree: return "NonTree";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kBadN: return "BadN";
    case ErrorCode::kNotAQuestion: return "NotAQuestion";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kEmptyList: return "EmptyList";
    case ErrorCode::kNegativeInput: return "NegativeInput";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kZeroTotal: return "ZeroTotal";
    case ErrorCode::kNoDocuments: return "NoDocuments";
    case ErrorCode::kBadConfig: return "BadConfig";
  }
  return "Unknown";
}

int ParsedSentence::root() const {
  for (const Token& t : tokens) {
    if (t.head == 0) return t.index;
  }
  return 0;
}

void ValidateSentence(const ParsedSentence& sentence, int ordinal) {
  const int n = static_cast<int>(sentence.tokens.size());
  std::ostringstream where;
  where << "sentence " << ordinal;
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = sentence.tokens[i];
    if (t.index != i + 1) {
      throw Error(ErrorCode::kBadIndex,
                  where.str() + ": token indices must run 1..n, found " +
                      std::to_string(t.index) + " at position " +
                      std::to_string(i + 1));
    }
    if (t.head < 0 || t.head > n) {
      throw Error(ErrorCode::kBadIndex,
                  where.str() + ": head " + std::to_string(t.head) +
                      " of token " + std::to_string(t.index) +
                      " is out of range");
    }
    if (t.head == t.index) {
      throw Error(ErrorCode::kNonTree,
                  where.str() + ": token " + std::to_string(t.index) +
                      " is its own head");
    }
    if (t.head == 0) ++roots;
  }
  if (n == 0) return;
  if (roots != 1) {
    throw Error(ErrorCode::kNonTree, where.str() + ": expected one root, found " +
                                         std::to_string(roots));
  }
  // Every token must reach the root within n steps.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0) {
      cur = sentence.tokens[cur - 1].head;
      if (++steps > n) {
        throw Error(ErrorCode::kNonTree,
                    where.str() + ": cycle through token " + std::to_string(i));
      }
    }
  }
}

std::vector<ParsedSentence> ParseConllu(std::string_view text) {
  std::vector<ParsedSentence> sentences;
  ParsedSentence current;
  bool have_text = false;
  int line_no = 0;

  auto flush = [&]() {
    if (current.tokens.empty()) {
      current = ParsedSentence();
      have_text = false;
      return;
    }
    if (!have_text) {
      std::vector<std::string> words;
      for (const Token& t : current.tokens) words.push_back(t.surface);
      current.text = internal::Join(words, " ");
    }
    ValidateSentence(current, static_cast<int>(sentences.size()) + 1);
    sentences.push_back(std::move(current));
    current = ParsedSentence();
    have_text = false;
  };

  for (std::string_view line : internal::SplitLines(text)) {
    ++line_no;
    if (internal::Trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      std::string_view body = internal::Trim(line.substr(1));
      if (body.substr(0, 4) == "text") {
        std::string_view rest = internal::Trim(body.substr(4));
        if (!rest.empty() && rest.front() == '=') {
          current.text = std::string(internal::Trim(rest.substr(1)));
          have_text = true;
        }
      }
      continue;
    }
    std::vector<std::string_view> cols = internal::Split(line, '\t');
    if (cols.size() != kColumns) {
      throw Error(ErrorCode::kMalformedLine,
                  LineError(line_no, "expected 10 tab-separated columns, found " +
                                         std::to_string(cols.size())));
    }
    // Multiword ranges ("3-4") and empty nodes ("3.1") carry no tree edge.
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;

    Token token;
    if (!ParseInt(cols[0], &token.index)) {
      throw Error(ErrorCode::kMalformedLine,
                  LineError(line_no, "bad token id '" + std::string(cols[0]) + "'"));
    }
    if (!ParseInt(cols[6], &token.head)) {
      throw Error(ErrorCode::kMalformedLine,
                  LineError(line_no, "bad head '" + std::string(cols[6]) + "'"));
    }
    token.surface = std::string(cols[1]);
    token.lemma = cols[2] == "_" ? token.surface : std::string(cols[2]);
    token.pos = Field(cols[4]);
    if (token.pos.empty()) token.pos = Field(cols[3]);
    token.deprel = Field(cols[7]);
    token.ner = NerFromMisc(cols[9]);
    current.tokens.push_back(std::move(token));
  }
  flush();
  return sentences;
}

std::string SerializeConllu(const ParsedSentence& sentence) {
  std::ostringstream os;
  os << "# text = " << sentence.text << "\n";
  for (const Token& t : sentence.tokens) {
    auto or_blank = [](const std::string& s) { return s.empty() ? "_" : s; };
    os << t.index << '\t' << t.surface << '\t' << or_blank(t.lemma) << "\t_\t"
       << or_blank(t.pos) << "\t_\t" << t.head << '\t' << or_blank(t.deprel)
       << "\t_\t";
    if (t.ner.empty() || t.ner == "O") {
      os << '_';
    } else {
      os << "NER=" << t.ner;
    }
    os << '\n';
  }
  os << '\n';
  return os.str();
}

std::string SerializeConllu(const std::vector<ParsedSentence>& sentences) {
  std::string out;
  for (const ParsedSentence& s : sentences) out += SerializeConllu(s);
  return out;
}

}  // namespace qafeat
