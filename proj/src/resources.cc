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

#include "qafeat/resources.h"

#include <fstream>
#include <sstream>

#include "qafeat/error.h"

namespace qafeat {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "cannot read " + path);
  return buffer.str();
}

Resources LoadResources(const ResourcePaths& paths) {
  auto text = [](const std::string& path, std::string_view fallback) {
    return path.empty() ? std::string(fallback) : ReadFile(path);
  };
  Resources r;
  r.stopwords = ParseStopwords(text(paths.stopwords, kDefaultStopwords));
  r.headword_rules = ParseHeadwordRules(text(paths.headword_rules, kDefaultHeadwordRules));
  r.lexicon = HypernymGraph::FromTsv(text(paths.lexicon, kDefaultHypernyms),
                                     paths.lexicon.empty() ? "builtin" : paths.lexicon);
  r.dp_config = ParseDpConfig(text(paths.dp_config, kDefaultDpConfig));
  r.eat_map = ParseCategoryMap(text(paths.eat_map, kDefaultEatMap));
  return r;
}

const Resources& DefaultResources() {
  static const Resources* const kResources = new Resources(LoadResources({}));
  return *kResources;
}

}  // namespace qafeat
