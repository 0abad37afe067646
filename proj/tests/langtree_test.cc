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

#include <random>

#include "oracles.h"
#include "phonxfer/error.h"
#include "phonxfer/fixtures.h"
#include "phonxfer/langtree.h"

namespace phonxfer {
namespace {

const char kChain[] = "Root\n\tIndoEuropean\n\t\tSlavic\n\t\t\tBulgarian\n";

TEST(TreeTest, ChainParse) {
  LanguageTree t = parse_tree(kChain);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.root(), "Root");
  EXPECT_EQ(t.depth("Root"), 0);
  EXPECT_EQ(t.depth("IndoEuropean"), 1);
  EXPECT_EQ(t.depth("Bulgarian"), 3);
  EXPECT_EQ(t.kind("Bulgarian"), NodeKind::kLanguage);
  EXPECT_EQ(t.kind("IndoEuropean"), NodeKind::kFamily);
  EXPECT_EQ(t.kind("Slavic"), NodeKind::kBranch);
  EXPECT_EQ(t.parent("Slavic"), "IndoEuropean");
  EXPECT_EQ(t.parent("Root"), "");
}

TEST(TreeTest, Errors) {
  try {
    parse_tree("Root\n\tA\n\t\t\tB\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_tree("Root\n\tSlavic\n\tX\n\t\tSlavic\n"), InputError);
  EXPECT_THROW(parse_tree("A\nB\n"), InputError);
  EXPECT_THROW(parse_tree("\tA\n"), InputError);
  EXPECT_THROW(parse_tree("# nothing\n"), InputError);
  EXPECT_THROW(parse_tree("Root\n\tL\tlanguage\n\t\tM\n"), InputError);
}

TEST(TreeTest, LcaAndDistance) {
  LanguageTree t = parse_tree("R\n\tP\n\t\tA\n\t\tB\n\tQ\n");
  EXPECT_EQ(t.lca("A", "A"), "A");
  EXPECT_EQ(t.lca("A", "B"), "P");
  EXPECT_EQ(t.lca("A", "Q"), "R");
  EXPECT_EQ(t.distance("A", "A").value, 0);
  EXPECT_EQ(t.distance("A", "B").value, 2);
  TreeDistance d = t.distance("A", "Q");
  EXPECT_EQ(d.value, 3);
  EXPECT_EQ(d.lca_name, "R");
  EXPECT_EQ(d.depth_a, 2);
  EXPECT_EQ(d.depth_lca, 0);
  EXPECT_THROW(t.distance("A", "Z"), InputError);
}

TEST(TreeTest, SerializeRoundTrip) {
  LanguageTree t = load_tree_fixture();
  LanguageTree u = parse_tree(t.serialize());
  EXPECT_EQ(u.serialize(), t.serialize());
  EXPECT_EQ(u.names(), t.names());
}

TEST(TreeTest, RandomTreesMatchBfs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 50);
    oracle::RandomTree rt = oracle::random_tree(rng, n);
    LanguageTree t = parse_tree(rt.text);
    for (int a = 0; a < n; ++a) {
      std::vector<int> dist = oracle::bfs(rt.parent, a);
      for (int b = 0; b < n; ++b) {
        ASSERT_EQ(t.distance(rt.names[a], rt.names[b]).value, dist[b]);
      }
    }
  }
}

TEST(TreeTest, DemoTreeParses) {
  LanguageTree t = std::get<LanguageTree>(load_fixture("demo-tree"));
  EXPECT_GT(t.size(), 10u);
}

}  // namespace
}  // namespace phonxfer
