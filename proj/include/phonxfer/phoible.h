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

#ifndef PHONXFER_PHOIBLE_H_
#define PHONXFER_PHOIBLE_H_

// Segment feature tables in the PHOIBLE layout: one IPA segment per row,
// 37 ternary phonological features per segment.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phonxfer/error.h"

namespace phonxfer {

inline constexpr std::size_t kFeatureCount = 37;

// Canonical column order, tone ... click.
const std::array<std::string_view, kFeatureCount>& canonical_feature_names();

// Index of `name` in the canonical order, or kFeatureCount if unknown.
std::size_t canonical_feature_index(std::string_view name);

// A single feature cell: "+", "-", "0", or a comma-joined multi-value such
// as "+,-" with at least two distinct components.
class FeatureValue {
 public:
  FeatureValue() : token_("0") {}

  // Throws InputError for tokens outside the grammar above.
  static FeatureValue parse(std::string_view token);

  const std::string& token() const { return token_; }
  bool is_multi() const { return token_.size() > 1; }
  // Component signs in order of appearance, each one of '+', '-', '0'.
  std::vector<char> components() const;

  friend bool operator==(const FeatureValue&, const FeatureValue&) = default;

 private:
  explicit FeatureValue(std::string token) : token_(std::move(token)) {}
  std::string token_;
};

struct PhoneFeatures {
  std::string symbol;  // NFC
  std::array<FeatureValue, kFeatureCount> values;  // canonical order

  friend bool operator==(const PhoneFeatures&, const PhoneFeatures&) = default;
};

// Immutable once built; entries are keyed by NFC symbol and iterate in
// codepoint order.
class FeatureTable {
 public:
  const std::array<std::string_view, kFeatureCount>& feature_names() const {
    return canonical_feature_names();
  }
  const std::map<std::string, PhoneFeatures, std::less<>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Exact lookup of an already-normalized symbol; nullptr when absent.
  const PhoneFeatures* find(std::string_view nfc_symbol) const;

  // Throws InputError if the (normalized) symbol is already present.
  void add(PhoneFeatures phone);

  friend bool operator==(const FeatureTable&, const FeatureTable&) = default;

 private:
  std::map<std::string, PhoneFeatures, std::less<>> entries_;
};

struct FeatureTableParse {
  FeatureTable table;
  // Non-fatal findings, e.g. ignored extra columns.
  std::vector<std::string> warnings;
};

// Parses delimited text with a header row. The first column holds the
// segment; the 37 canonical feature columns may appear in any order and are
// stored in canonical order. Unknown columns are ignored with a warning.
FeatureTableParse parse_feature_table(std::string_view text,
                                      char delimiter = ',',
                                      std::string_view source = "features");

// Header "segment" + canonical names; one row per entry in codepoint order.
std::string serialize_feature_table(const FeatureTable& table,
                                    char delimiter = ',');

// Number of features whose tokens are identical, in [0, 37].
int feature_similarity(const PhoneFeatures& a, const PhoneFeatures& b);

// Names of the features on which `a` and `b` differ, in canonical order.
std::vector<std::string> differing_features(const PhoneFeatures& a,
                                            const PhoneFeatures& b);

enum class FallbackPolicy {
  kNone,
  // Drop combining marks and modifier letters one at a time from the right
  // of the NFD form, retrying after each removal.
  kStripModifiers,
};

struct LookupResult {
  const PhoneFeatures* features = nullptr;
  bool used_fallback = false;
  // Forms tried after the original, in order.
  std::vector<std::string> fallback_chain;
};

class UnknownSymbolError : public InputError {
 public:
  UnknownSymbolError(std::string symbol, std::vector<std::string> chain);

  const std::string& symbol() const { return symbol_; }
  const std::vector<std::string>& fallback_chain() const { return chain_; }

 private:
  std::string symbol_;
  std::vector<std::string> chain_;
};

// Normalizes `symbol` to NFC and looks it up, applying `policy` on a miss.
// Throws UnknownSymbolError when nothing matches.
LookupResult lookup(const FeatureTable& table, std::string_view symbol,
                    FallbackPolicy policy = FallbackPolicy::kNone);

}  // namespace phonxfer

#endif  // PHONXFER_PHOIBLE_H_
