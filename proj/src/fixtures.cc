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

#include "phonxfer/fixtures.h"

#include <cstdlib>

#include "phonxfer/error.h"
#include "phonxfer/text_io.h"

namespace phonxfer {

namespace {

namespace fs = std::filesystem;

FeatureTable load_clean_table(const fs::path& path) {
  FeatureTableParse parsed =
      parse_feature_table(read_file(path), ',', path.string());
  if (!parsed.warnings.empty()) {
    throw InputError("fixture " + path.string() + " has warnings: " +
                     join(parsed.warnings, "; "));
  }
  return std::move(parsed.table);
}

MiniLanguage load_mini_language(const fs::path& dir, const std::string& role,
                                const std::string& language) {
  MiniLanguage lang;
  lang.language = language;
  const fs::path corpus = dir / (role + "_corpus.tsv");
  const fs::path dict = dir / (role + "_dict.tsv");
  lang.text = parse_corpus(read_file(corpus), language, corpus.string());
  lang.dictionary = parse_dictionary(read_file(dict), language, dict.string());
  PhonemizeResult result =
      phonemize(lang.text, lang.dictionary, OovPolicy::kError);
  lang.phonemized = std::move(result.corpus);
  return lang;
}

}  // namespace

fs::path default_data_dir() {
  if (const char* env = std::getenv("PHONXFER_DATA_DIR"); env && *env) {
    return env;
  }
  return PHONXFER_DATA_DIR;
}

std::vector<std::string> fixture_names() {
  return {"demo-tree", "mini", "table2", "tree"};
}

FeatureTable load_table2_fixture(const fs::path& data_dir) {
  return load_clean_table(data_dir / "fixtures" / "table2_features.csv");
}

MiniFixture load_mini_fixture(const fs::path& data_dir) {
  const fs::path dir = data_dir / "fixtures" / "mini";
  MiniFixture f;
  f.source = load_mini_language(dir, "source", "Srclang");
  f.target = load_mini_language(dir, "target", "Tgtlang");
  f.features = load_clean_table(dir / "features.csv");
  return f;
}

LanguageTree load_tree_fixture(const fs::path& data_dir) {
  const fs::path path = data_dir / "fixtures" / "tree.txt";
  return LanguageTree::parse(read_file(path), path.string());
}

Fixture load_fixture(std::string_view name, const fs::path& data_dir) {
  if (name == "table2") return load_table2_fixture(data_dir);
  if (name == "mini") return load_mini_fixture(data_dir);
  if (name == "tree") return load_tree_fixture(data_dir);
  if (name == "demo-tree") {
    const fs::path path = data_dir / "fixtures" / "glottolog_demo_tree.txt";
    return LanguageTree::parse(read_file(path), path.string());
  }
  throw InputError("unknown fixture '" + std::string(name) +
                   "' (known: " + join(fixture_names(), ", ") + ")");
}

}  // namespace phonxfer
