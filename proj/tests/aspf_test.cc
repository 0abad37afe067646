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

#include <cmath>
#include <random>

#include "oracles.h"
#include "phonxfer/aspf.h"
#include "phonxfer/error.h"

namespace phonxfer {
namespace {

PhoneFrequencyVector freq(const PhoneCounts& c) {
  return PhoneFrequencyVector::from_counts(c);
}

TEST(CosineTest, Examples) {
  WeightMap a{{"x", 0.5}, {"y", 0.5}};
  WeightMap b{{"x", 0.5}, {"z", 0.5}};
  EXPECT_NEAR(cosine_similarity(a, a), 1.0, 1e-15);
  EXPECT_EQ(cosine_similarity(WeightMap{{"x", 1}}, WeightMap{{"y", 1}}), 0.0);
  EXPECT_NEAR(cosine_similarity(a, b), 0.5, 1e-15);
  EXPECT_THROW(cosine_similarity(WeightMap{}, a), InputError);
  EXPECT_THROW(cosine_similarity(WeightMap{{"x", -1}}, a), InputError);
}

TEST(AspfTest, AnalyticValues) {
  WeightMap a{{"x", 0.5}, {"y", 0.5}};
  WeightMap b{{"x", 0.5}, {"z", 0.5}};
  EXPECT_NEAR(aspf(a, a).value, 1.0, 1e-9);
  EXPECT_NEAR(aspf(a, WeightMap{{"q", 3}}).value, 0.0, 1e-9);
  EXPECT_NEAR(aspf(a, b).value, 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(aspf(a, b).cosine, 0.5, 1e-12);
  EXPECT_NEAR(angular_similarity(0.5), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(angular_similarity(0.0), 0.0);
  EXPECT_EQ(angular_similarity(1.0), 1.0);
}

TEST(AspfTest, IdenticalVectorsAreExactlyOneAtScale) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    WeightMap a;
    for (int i = 0; i < 20; ++i) {
      a[std::to_string(i)] = std::uniform_real_distribution<>(0, 1e6)(rng);
    }
    WeightMap scaled = a;
    for (auto& [k, v] : scaled) v *= 7.25;
    EXPECT_NEAR(aspf(a, a).value, 1.0, 1e-9);
    EXPECT_NEAR(aspf(a, scaled).value, 1.0, 1e-9);
  }
}

TEST(AspfTest, MatchesArccosWhereWellConditioned) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    WeightMap a, b;
    std::map<std::string, double> oa, ob;
    for (int i = 0; i < 6; ++i) {
      std::string k(1, static_cast<char>('a' + i));
      if (rng() % 3) oa[k] = a[k] = static_cast<double>(rng() % 20);
      if (rng() % 3) ob[k] = b[k] = static_cast<double>(rng() % 20);
    }
    double na = 0, nb = 0;
    for (auto& [k, v] : a) na += v;
    for (auto& [k, v] : b) nb += v;
    if (na == 0 || nb == 0) continue;
    AspfScore s = aspf(a, b);
    if (s.cosine > 0.99) continue;
    EXPECT_NEAR(s.value, oracle::angular(oa, ob), 1e-12);
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(AspfTest, Properties) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 1000; ++t) {
    PhoneCounts ca, cb;
    for (int i = 0; i < 8; ++i) {
      std::string k(1, static_cast<char>('a' + i));
      if (rng() % 2) ca[k] = 1 + rng() % 50;
      if (rng() % 2) cb[k] = 1 + rng() % 50;
    }
    if (ca.empty() || cb.empty()) continue;
    AspfScore ab = aspf(freq(ca), freq(cb));
    AspfScore ba = aspf(freq(cb), freq(ca));
    EXPECT_GE(ab.value, 0.0);
    EXPECT_LE(ab.value, 1.0);
    EXPECT_EQ(ab.value, ba.value);
    WeightMap raw_a, raw_b;
    for (auto& [k, n] : ca) raw_a[k] = static_cast<double>(n);
    for (auto& [k, n] : cb) raw_b[k] = static_cast<double>(n);
    EXPECT_NEAR(aspf(raw_a, raw_b).value, ab.value, 1e-12);
  }
}

TEST(RankTest, OrderAndTies) {
  PhoneFrequencyVector t = freq({{"a", 1}, {"b", 1}});
  NamedVectors cands = {{"B", freq({{"q", 1}})},
                        {"A", freq({{"a", 2}, {"b", 2}})},
                        {"D", freq({{"a", 1}})},
                        {"C", freq({{"b", 5}})}};
  auto r = rank_sources(t, cands);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].name, "A");
  EXPECT_NEAR(r[0].score.value, 1.0, 1e-12);
  EXPECT_EQ(r[1].name, "C");  // C and D tie exactly; alphabetical
  EXPECT_EQ(r[2].name, "D");
  EXPECT_EQ(r[3].name, "B");
  EXPECT_EQ(r[3].score.value, 0.0);
  EXPECT_THROW(rank_sources(t, {}), InputError);
}

TEST(RankTest, MonotoneInCosine) {
  // Unit vectors at chosen cosines against {x:1}, via integer-free weights.
  PhoneFrequencyVector t = freq({{"x", 1}});
  NamedVectors cands;
  for (double c : {0.1, 0.9, 0.5}) {
    double s = std::sqrt(1 - c * c);
    PhoneCounts counts{{"x", static_cast<std::size_t>(std::llround(c * 1e6))},
                       {"y", static_cast<std::size_t>(std::llround(s * 1e6))}};
    cands.emplace_back("c" + std::to_string(c), freq(counts));
  }
  auto r = rank_sources(t, cands);
  EXPECT_GT(r[0].score.value, r[1].score.value);
  EXPECT_GT(r[1].score.value, r[2].score.value);
  EXPECT_EQ(r[0].name.substr(0, 4), "c0.9");
}

ContextProfile profile(PhoneCounts front, PhoneCounts back) {
  return {"p", freq(front), freq(back)};
}

TEST(ContextAspfTest, IdenticalAndZeroSide) {
  ContextProfile a = profile({{"k", 1}}, {{"t", 2}, {"s", 1}});
  ContextAspf same = context_aspf(a, a);
  EXPECT_NEAR(same.front.value, 1.0, 1e-12);
  EXPECT_NEAR(same.averaged, 1.0, 1e-12);

  ContextProfile b = profile({}, {{"t", 2}, {"s", 1}});
  ContextAspf z = context_aspf(a, b);
  EXPECT_TRUE(z.front_zero);
  EXPECT_FALSE(z.back_zero);
  EXPECT_EQ(z.front.value, 0.0);
  EXPECT_NEAR(z.back.value, 1.0, 1e-12);
  EXPECT_NEAR(z.averaged, 0.5, 1e-12);
}

TEST(ContextAspfTest, BothSidesZero) {
  ContextProfile a = profile({}, {});
  ContextProfile b = profile({{"k", 1}}, {{"t", 1}});
  EXPECT_THROW(context_aspf(a, b), InputError);
  ContextAspf z = context_aspf_or_zero(a, b);
  EXPECT_TRUE(z.front_zero && z.back_zero);
  EXPECT_EQ(z.averaged, 0.0);
}

TEST(MatrixTest, Format) {
  NamedVectors t = {{"T", freq({{"a", 1}})}};
  NamedVectors c = {{"S1", freq({{"a", 1}})}, {"S2", freq({{"b", 1}})}};
  EXPECT_EQ(format_aspf_matrix(t, c), "target\tS1\tS2\nT\t1.000000\t0.000000\n");
}

}  // namespace
}  // namespace phonxfer
