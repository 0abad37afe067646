// Copyright 2026 The phonxfer Authors
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

#ifndef PHONXFER_FIXTURES_H_
#define PHONXFER_FIXTURES_H_

// Bundled miniature datasets under data/fixtures:
//
//   table2     table2_features.csv       /o/ and its three tied candidates
//   mini       mini/*                    source + target mini-languages
//   tree       tree.txt                  synthetic 4-level family tree
//   demo-tree  glottolog_demo_tree.txt   simplified real-language tree
//
// The data directory defaults to the source tree's data/ and can be moved
// with the PHONXFER_DATA_DIR environment variable.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phonxfer/langtree.h"
#include "phonxfer/lexicon.h"
#include "phonxfer/phoible.h"

namespace phonxfer {

struct MiniLanguage {
  std::string language;
  Corpus text;  // raw utterances
  PronunciationDictionary dictionary;
  Corpus phonemized;
};

// Both languages share phones and each has phones the other lacks; target
// /o/ ties with source /ɒ ɵ ʊ/ on feature similarity.
struct MiniFixture {
  MiniLanguage source;
  MiniLanguage target;
  FeatureTable features;
};

using Fixture = std::variant<FeatureTable, MiniFixture, LanguageTree>;

std::filesystem::path default_data_dir();

std::vector<std::string> fixture_names();

// Parses and validates the named fixture; throws InputError for an unknown
// name or a fixture that does not load cleanly.
Fixture load_fixture(std::string_view name,
                     const std::filesystem::path& data_dir = default_data_dir());

FeatureTable load_table2_fixture(
    const std::filesystem::path& data_dir = default_data_dir());
MiniFixture load_mini_fixture(
    const std::filesystem::path& data_dir = default_data_dir());
LanguageTree load_tree_fixture(
    const std::filesystem::path& data_dir = default_data_dir());

}  // namespace phonxfer

#endif  // PHONXFER_FIXTURES_H_
