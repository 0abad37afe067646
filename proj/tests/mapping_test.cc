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
#include "phonxfer/mapping.h"
#include "random_triples.h"

namespace phonxfer {
namespace {

Corpus corpus_of(std::string lang, std::vector<PhoneSequence> seqs) {
  Corpus c{std::move(lang), {}};
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    c.utterances.push_back({"u" + std::to_string(i), "", std::move(seqs[i])});
  }
  return c;
}

TEST(MappingTest, SelfMapping) {
  FeatureTable t = load_table2_fixture();
  PhoneMapping m = build_mapping(corpus_of("T", {{"o", "ɵ"}}),
                                 corpus_of("S", {{"ɵ", "o", "ʊ"}}), t);
  const MappingEntry* e = m.find("o");
  ASSERT_NE(e, nullptr);
  EXPECT_TRUE(e->self_mapped);
  EXPECT_EQ(e->source_phone, "o");
  EXPECT_EQ(e->similarity, 37);
  EXPECT_FALSE(e->tie_break.has_value());
  EXPECT_TRUE(e->tied_candidates.empty());
}

TEST(MappingTest, RoundedVowelTieUsesContexts) {
  FeatureTable t = load_table2_fixture();
  // o follows ʊ in the target; in the source ʊ is followed by ɵ only.
  Corpus target = corpus_of("T", {{"ʊ", "o", "ʊ"}});
  Corpus source = corpus_of("S", {{"ʊ", "ɵ", "ʊ"}, {"ɒ", "ɒ"}});
  PhoneMapping m = build_mapping(target, source, t);
  const MappingEntry* e = m.find("o");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->tied_candidates, (std::vector<std::string>{"ɒ", "ɵ", "ʊ"}));
  EXPECT_EQ(e->similarity, 35);
  EXPECT_EQ(e->source_phone, "ɵ");
  ASSERT_TRUE(e->tie_break.has_value());
  EXPECT_NEAR(e->tie_break->averaged, 1.0, 1e-12);
  EXPECT_FALSE(e->residual_tie);
}

TEST(MappingTest, ResidualTieByCodepointWithWarning) {
  FeatureTable t = load_table2_fixture();
  Corpus target = corpus_of("T", {{"ʊ", "o", "ʊ"}});
  Corpus source = corpus_of("S", {{"ʊ", "ɵ", "ʊ"}, {"ʊ", "ɒ", "ʊ"}});
  PhoneMapping m = build_mapping(target, source, t);
  const MappingEntry* e = m.find("o");
  EXPECT_EQ(e->source_phone, "ɒ");  // U+0252 < U+0275
  EXPECT_TRUE(e->residual_tie);
  EXPECT_EQ(m.warnings.size(), 1u);
}

TEST(MappingTest, ErrorsAndFallback) {
  FeatureTable t = load_table2_fixture();
  EXPECT_THROW(build_mapping(corpus_of("T", {{"ʘ"}}), corpus_of("S", {{"o"}}), t),
               InputError);
  MappingOptions opt;
  opt.fallback = FallbackPolicy::kStripModifiers;
  PhoneMapping m = build_mapping(corpus_of("T", {{"\u00f5"}}),
                                 corpus_of("S", {{"o"}}), t,
                                 BoundaryMode::kSkip, opt);
  ASSERT_NE(m.find("\u00f5"), nullptr);
  EXPECT_EQ(m.find("\u00f5")->source_phone, "o");
  EXPECT_EQ(m.find("\u00f5")->similarity, 37);
  EXPECT_FALSE(m.find("\u00f5")->self_mapped);
}

TEST(MappingTest, ApplyMapping) {
  FeatureTable t = load_table2_fixture();
  PhoneMapping m;
  m.entries = {{"k", "k", 37, {}, {}, {}, true, false},
               {"o", "ɵ", 35, {}, {}, {}, false, false},
               {"t", "t", 37, {}, {}, {}, true, false}};
  Corpus out = apply_mapping(corpus_of("T", {{"k", "o", "t"}}), m);
  EXPECT_EQ(out.utterances[0].phones, (PhoneSequence{"k", "ɵ", "t"}));
  EXPECT_THROW(apply_mapping(corpus_of("T", {{"q"}}), m), InputError);
}

TEST(MappingTest, SharedInventoryIsIdentity) {
  FeatureTable t = load_table2_fixture();
  Corpus target = corpus_of("T", {{"o", "ɵ"}, {"ɵ"}});
  Corpus source = corpus_of("S", {{"ʊ", "ɵ", "o"}});
  EXPECT_EQ(apply_mapping(target, build_mapping(target, source, t)), target);
}

TEST(MappingTest, SerializeRoundTrip) {
  MiniFixture f = load_mini_fixture();
  PhoneMapping m =
      build_mapping(f.target.phonemized, f.source.phonemized, f.features);
  std::string text = serialize_mapping(m);
  PhoneMapping back = parse_mapping(text);
  EXPECT_EQ(serialize_mapping(back), text);
  EXPECT_EQ(back.entries.size(), m.entries.size());
}

TEST(MappingTest, RandomTriplesMatchOracle) {
  std::mt19937_64 rng(37);
  int ties = 0;
  for (int trial = 0; trial < 300; ++trial) {
    testing_support::Triple tr = testing_support::random_triple(rng);
    PhoneMapping m = build_mapping(tr.target, tr.source, tr.table);
    auto expect = oracle::mapping(tr.target_utts, tr.source_utts, tr.features);
    ASSERT_EQ(m.entries.size(), expect.size());
    PhoneCounts src_inv = phone_inventory(tr.source);
    for (const MappingEntry& e : m.entries) {
      const oracle::OracleEntry& o = expect.at(e.target_phone);
      EXPECT_EQ(e.source_phone, o.source) << "trial " << trial;
      EXPECT_EQ(e.similarity, o.similarity);
      EXPECT_EQ(e.self_mapped, o.self);
      EXPECT_EQ(e.tie_break.has_value(), !e.tied_candidates.empty());
      EXPECT_EQ(src_inv.count(e.source_phone), 1u);
      ties += !e.tied_candidates.empty();
      // Winner optimality by re-scoring.
      for (const CandidateScore& cs : e.candidate_scores) {
        EXPECT_LE(cs.context.averaged, e.tie_break->averaged + 1e-12);
      }
    }
    // Applying the mapping lands inside the source inventory.
    for (const auto& [p, n] : phone_inventory(apply_mapping(tr.target, m))) {
      EXPECT_EQ(src_inv.count(p), 1u);
    }
  }
  EXPECT_GT(ties, 50);
}

}  // namespace
}  // namespace phonxfer
