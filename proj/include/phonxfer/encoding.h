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

#ifndef PHONXFER_ENCODING_H_
#define PHONXFER_ENCODING_H_

// Model inputs for the three transfer scenarios:
//   nomap   - labels over the union of source and target inventories
//   map     - labels over the source inventory, target mapped beforehand
//   feature - one 37-dimensional phonological feature vector per phone

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "phonxfer/lexicon.h"
#include "phonxfer/mapping.h"
#include "phonxfer/phoible.h"

namespace phonxfer {

enum class Scenario { kNomap, kMap, kFeature };

const char* to_string(Scenario scenario);
Scenario parse_scenario(std::string_view name);

// Dense 0-based ids in codepoint order of the symbols.
struct LabelVocabulary {
  std::vector<std::string> symbols;
  std::map<std::string, int, std::less<>> ids;
  // Ids of symbols that the source inventory lacks.
  std::set<int> new_symbol_ids;

  // Throws InputError for an unknown symbol.
  int id(std::string_view symbol) const;
};

// `mapping` is required for kMap and ignored for kNomap; kFeature has no
// label vocabulary and is rejected.
LabelVocabulary build_vocabulary(Scenario scenario,
                                 const PhoneCounts& source_inventory,
                                 const PhoneCounts& target_inventory,
                                 const PhoneMapping* mapping = nullptr);

// "+" -> 1, "-" -> -1, "0" -> 0; multi-valued cells -> mean of components.
double encode_feature_value(const FeatureValue& value);

using FeatureVector37 = std::array<double, kFeatureCount>;

FeatureVector37 encode_phone(const PhoneFeatures& phone);

struct LabelEncodedUtterance {
  std::string id;
  std::vector<int> labels;
};

struct FeatureEncodedUtterance {
  std::string id;
  std::vector<FeatureVector37> vectors;
};

// Throws InputError naming the phone and utterance when a phone is not in
// the vocabulary. For kMap, apply the mapping to the corpus first.
std::vector<LabelEncodedUtterance> encode_labels(const Corpus& corpus,
                                                 const LabelVocabulary& vocab);

std::vector<FeatureEncodedUtterance> encode_features(
    const Corpus& corpus, const FeatureTable& table,
    FallbackPolicy fallback = FallbackPolicy::kNone);

PhoneSequence decode_labels(const std::vector<int>& labels,
                            const LabelVocabulary& vocab);

// "index<TAB>symbol<TAB>is_new" per symbol.
std::string serialize_vocabulary(const LabelVocabulary& vocab);

// "id<TAB>3 0 2" per utterance.
std::string serialize_labels(const std::vector<LabelEncodedUtterance>& rows);

// "id<TAB>v1,...,v37;v1,...,v37" per utterance.
std::string serialize_features(const std::vector<FeatureEncodedUtterance>& rows);

}  // namespace phonxfer

#endif  // PHONXFER_ENCODING_H_
