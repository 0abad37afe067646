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

#ifndef PHONXFER_ASPF_H_
#define PHONXFER_ASPF_H_

// Angular similarity of phone frequency vectors (ASPF):
//
//   cos = (a . b) / (|a| |b|)
//   ASPF = 1 - 2 * arccos(cos) / pi
//
// which lies in [0, 1] for non-negative vectors.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phonxfer/lexicon.h"

namespace phonxfer {

// Sparse non-negative vector keyed by phone; missing keys are zero. Raw
// counts and relative frequencies are interchangeable here.
using WeightMap = std::map<std::string, double, std::less<>>;

struct AspfScore {
  double value = 0.0;   // angular similarity in [0, 1]
  double cosine = 0.0;  // clamped to [-1, 1]
};

struct ContextAspf {
  AspfScore front;
  AspfScore back;
  double averaged = 0.0;  // (front.value + back.value) / 2
  // Set when that side had a zero vector and was scored 0.
  bool front_zero = false;
  bool back_zero = false;
};

// Throws InputError if either vector is zero or has a negative entry.
double cosine_similarity(const WeightMap& a, const WeightMap& b);
double cosine_similarity(const PhoneFrequencyVector& a,
                         const PhoneFrequencyVector& b);

// 1 - 2 * arccos(clamp(cosine)) / pi.
double angular_similarity(double cosine);

AspfScore aspf(const WeightMap& a, const WeightMap& b);
AspfScore aspf(const PhoneFrequencyVector& a, const PhoneFrequencyVector& b);

struct RankedSource {
  std::string name;
  AspfScore score;
};

using NamedVectors = std::vector<std::pair<std::string, PhoneFrequencyVector>>;

// Candidates by ASPF to `target`, highest first; equal values are ordered
// by name (codepoint order). Throws InputError on an empty list.
std::vector<RankedSource> rank_sources(const PhoneFrequencyVector& target,
                                       const NamedVectors& candidates);

// Front and back ASPF between two context profiles. A side with a zero
// vector on either profile scores 0 and is flagged; if both sides are zero
// this throws InputError.
ContextAspf context_aspf(const ContextProfile& target,
                         const ContextProfile& candidate);

// As context_aspf, but a profile pair with no usable side scores 0 on both
// sides (both flags set) instead of throwing.
ContextAspf context_aspf_or_zero(const ContextProfile& target,
                                 const ContextProfile& candidate);

// Tab-delimited matrix: header "target" + column names, one row per target,
// cells to 6 decimals.
std::string format_aspf_matrix(const NamedVectors& targets,
                               const NamedVectors& candidates);

}  // namespace phonxfer

#endif  // PHONXFER_ASPF_H_
