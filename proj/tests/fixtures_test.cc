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

#include <gtest/gtest.h>

#include "phonxfer/error.h"
#include "phonxfer/fixtures.h"
#include "phonxfer/mapping.h"

namespace phonxfer {
namespace {

TEST(FixturesTest, Registry) {
  EXPECT_EQ(fixture_names(),
            (std::vector<std::string>{"demo-tree", "mini", "table2", "tree"}));
  EXPECT_THROW(load_fixture("nope"), InputError);
  EXPECT_EQ(std::get<FeatureTable>(load_fixture("table2")).size(), 4u);
}

TEST(FixturesTest, MiniLanguagesOverlapPartially) {
  MiniFixture f = load_mini_fixture();
  EXPECT_LE(f.source.phonemized.utterances.size(), 30u);
  EXPECT_LE(f.target.phonemized.utterances.size(), 30u);
  PhoneCounts s = phone_inventory(f.source.phonemized);
  PhoneCounts t = phone_inventory(f.target.phonemized);
  int shared = 0, differ = 0;
  for (const auto& [p, n] : t) (s.count(p) ? shared : differ)++;
  for (const auto& [p, n] : s) differ += t.count(p) == 0;
  EXPECT_GE(shared, 1);
  EXPECT_GE(differ, 2);
}

TEST(FixturesTest, MiniProducesSimilarityTie) {
  MiniFixture f = load_mini_fixture();
  PhoneMapping m =
      build_mapping(f.target.phonemized, f.source.phonemized, f.features);
  int ties = 0;
  for (const MappingEntry& e : m.entries) {
    ties += e.tied_candidates.size() >= 2;
  }
  EXPECT_GE(ties, 1);
}

TEST(FixturesTest, TreeHasThreeLevels) {
  LanguageTree t = load_tree_fixture();
  int max_depth = 0;
  for (const std::string& n : t.names()) max_depth = std::max(max_depth, t.depth(n));
  EXPECT_GE(max_depth, 2);
  EXPECT_TRUE(t.contains("Srclang"));
  EXPECT_TRUE(t.contains("Tgtlang"));
}

}  // namespace
}  // namespace phonxfer
