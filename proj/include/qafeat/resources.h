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

#ifndef QAFEAT_RESOURCES_H_
#define QAFEAT_RESOURCES_H_

#include <string>
#include <string_view>

#include "qafeat/semantic.h"
#include "qafeat/structural.h"
#include "qafeat/syntactic.h"

namespace qafeat {

// Default resource files, compiled in from data/.
extern const std::string_view kDefaultStopwords;
extern const std::string_view kDefaultHeadwordRules;
extern const std::string_view kDefaultDpConfig;
extern const std::string_view kDefaultEatMap;
extern const std::string_view kDefaultHypernyms;

struct Resources {
  Stopwords stopwords;
  HeadwordRules headword_rules;
  HypernymGraph lexicon;
  DpConfig dp_config;
  CategoryMap eat_map;
};

// Empty paths select the embedded default.
struct ResourcePaths {
  std::string lexicon;
  std::string stopwords;
  std::string headword_rules;
  std::string dp_config;
  std::string eat_map;
};

Resources LoadResources(const ResourcePaths& paths);
const Resources& DefaultResources();

// Throws kIoFailure.
std::string ReadFile(const std::string& path);

}  // namespace qafeat

#endif  // QAFEAT_RESOURCES_H_
