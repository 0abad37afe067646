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

#ifndef PHONXFER_MAPPING_H_
#define PHONXFER_MAPPING_H_

// Target-to-source phone mapping. A target phone that the source already
// has maps to itself. Any other phone maps to the source phone with the
// most identical PHOIBLE features; ties go to the candidate whose context
// profile has the highest averaged front/back ASPF against the target
// phone's profile, then to the lowest symbol.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonxfer/aspf.h"
#include "phonxfer/lexicon.h"
#include "phonxfer/phoible.h"

namespace phonxfer {

struct CandidateScore {
  std::string symbol;
  ContextAspf context;
};

struct MappingEntry {
  std::string target_phone;
  std::string source_phone;
  int similarity = 0;
  // Winner's context scores; present iff tied_candidates is non-empty.
  std::optional<ContextAspf> tie_break;
  // All candidates sharing the top similarity (codepoint order), when > 1.
  std::vector<std::string> tied_candidates;
  // Context scores of every tied candidate, aligned with tied_candidates.
  std::vector<CandidateScore> candidate_scores;
  bool self_mapped = false;
  // Several tied candidates also shared the top averaged ASPF.
  bool residual_tie = false;
};

struct PhoneMapping {
  std::string target_language;
  std::string source_language;
  std::vector<MappingEntry> entries;  // by target_phone, codepoint order
  std::vector<std::string> warnings;

  const MappingEntry* find(std::string_view target_phone) const;
};

// What the mapping needs to know about one language: its inventory and the
// context profile of each inventory phone.
struct MappingSide {
  std::string language;
  PhoneCounts inventory;
  std::map<std::string, ContextProfile, std::less<>> profiles;
};

MappingSide make_mapping_side(const Corpus& corpus,
                              BoundaryMode mode = BoundaryMode::kSkip);

struct MappingOptions {
  FallbackPolicy fallback = FallbackPolicy::kNone;
  // Averaged ASPF values closer than this are treated as equal.
  double tie_tolerance = 1e-12;
};

PhoneMapping build_mapping(const MappingSide& target, const MappingSide& source,
                           const FeatureTable& table,
                           const MappingOptions& options = {});

PhoneMapping build_mapping(const Corpus& target, const Corpus& source,
                           const FeatureTable& table,
                           BoundaryMode mode = BoundaryMode::kSkip,
                           const MappingOptions& options = {});

// Replaces every phone by its mapped source phone. Throws InputError for a
// phone the mapping does not cover.
Corpus apply_mapping(const Corpus& corpus, const PhoneMapping& mapping);

// Tab-delimited with header:
//   target_phone source_phone similarity tied_candidates aspf_front
//   aspf_back aspf_averaged self_mapped
std::string serialize_mapping(const PhoneMapping& mapping);

// Reads the format written by serialize_mapping. Context scores come back
// rounded to 6 decimals.
PhoneMapping parse_mapping(std::string_view text,
                           std::string_view source = "mapping");

}  // namespace phonxfer

#endif  // PHONXFER_MAPPING_H_
