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

#include "phonxfer/aspf.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phonxfer/error.h"
#include "phonxfer/text_io.h"

namespace phonxfer {

namespace {

double norm(const WeightMap& v) {
  double sum = 0.0;
  for (const auto& [k, x] : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw InputError("frequency for '" + k + "' is not a finite "
                       "non-negative number");
    }
    sum += x * x;
  }
  return std::sqrt(sum);
}

// Visits the union of keys in codepoint order with (a_k, b_k), so that
// swapping the arguments produces the same sequence of operations.
template <typename Fn>
void for_each_pair(const WeightMap& a, const WeightMap& b, Fn&& fn) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      fn(ia->second, 0.0);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      fn(0.0, ib->second);
      ++ib;
    } else {
      fn(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
}

void require_nonzero(double n) {
  if (!(n > 0.0)) throw InputError("cannot compare a zero frequency vector");
}

const WeightMap& as_map(const PhoneFrequencyVector& v) { return v.weights(); }

}  // namespace

double cosine_similarity(const WeightMap& a, const WeightMap& b) {
  const double na = norm(a);
  const double nb = norm(b);
  require_nonzero(na);
  require_nonzero(nb);
  double dot = 0.0;
  for_each_pair(a, b, [&](double x, double y) { dot += x * y; });
  return std::clamp(dot / (na * nb), -1.0, 1.0);
}

double cosine_similarity(const PhoneFrequencyVector& a,
                         const PhoneFrequencyVector& b) {
  return cosine_similarity(as_map(a), as_map(b));
}

double angular_similarity(double cosine) {
  return 1.0 - 2.0 * std::acos(std::clamp(cosine, -1.0, 1.0)) /
                   std::numbers::pi;
}

AspfScore aspf(const WeightMap& a, const WeightMap& b) {
  const double na = norm(a);
  const double nb = norm(b);
  require_nonzero(na);
  require_nonzero(nb);
  // The angle is taken as 2 * atan2(|u - v|, |u + v|) on the unit vectors,
  // which equals arccos(cos) but keeps full precision near cos = +-1.
  double dot = 0.0;
  double diff = 0.0;
  double sum = 0.0;
  for_each_pair(a, b, [&](double x, double y) {
    dot += x * y;
    const double u = x / na;
    const double v = y / nb;
    diff += (u - v) * (u - v);
    sum += (u + v) * (u + v);
  });
  const double angle = 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
  AspfScore score;
  score.cosine = std::clamp(dot / (na * nb), -1.0, 1.0);
  score.value = std::clamp(1.0 - 2.0 * angle / std::numbers::pi, 0.0, 1.0);
  return score;
}

AspfScore aspf(const PhoneFrequencyVector& a, const PhoneFrequencyVector& b) {
  return aspf(as_map(a), as_map(b));
}

std::vector<RankedSource> rank_sources(const PhoneFrequencyVector& target,
                                       const NamedVectors& candidates) {
  if (candidates.empty()) throw InputError("no candidate source languages");
  std::vector<RankedSource> ranked;
  ranked.reserve(candidates.size());
  for (const auto& [name, vec] : candidates) {
    if (vec.is_zero()) {
      throw InputError("candidate '" + name + "' has no phone occurrences");
    }
    ranked.push_back({name, aspf(target, vec)});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedSource& a, const RankedSource& b) {
              if (a.score.value != b.score.value) {
                return a.score.value > b.score.value;
              }
              return a.name < b.name;
            });
  return ranked;
}

ContextAspf context_aspf_or_zero(const ContextProfile& target,
                                 const ContextProfile& candidate) {
  ContextAspf out;
  out.front_zero = target.front.is_zero() || candidate.front.is_zero();
  out.back_zero = target.back.is_zero() || candidate.back.is_zero();
  if (!out.front_zero) out.front = aspf(target.front, candidate.front);
  if (!out.back_zero) out.back = aspf(target.back, candidate.back);
  out.averaged = (out.front.value + out.back.value) / 2.0;
  return out;
}

ContextAspf context_aspf(const ContextProfile& target,
                         const ContextProfile& candidate) {
  ContextAspf out = context_aspf_or_zero(target, candidate);
  if (out.front_zero && out.back_zero) {
    throw InputError("no context on either side for '" + target.phone +
                     "' vs '" + candidate.phone + "'");
  }
  return out;
}

std::string format_aspf_matrix(const NamedVectors& targets,
                               const NamedVectors& candidates) {
  std::string out = "target";
  for (const auto& [name, vec] : candidates) out += '\t' + name;
  out += '\n';
  for (const auto& [row, tvec] : targets) {
    out += row;
    for (const auto& [col, cvec] : candidates) {
      out += '\t' + format_fixed(aspf(tvec, cvec).value, 6);
    }
    out += '\n';
  }
  return out;
}

}  // namespace phonxfer
