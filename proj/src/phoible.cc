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

#include "phonxfer/phoible.h"

#include <algorithm>
#include <set>

#include "phonxfer/text_io.h"
#include "phonxfer/unicode.h"

namespace phonxfer {

const std::array<std::string_view, kFeatureCount>& canonical_feature_names() {
  static constexpr std::array<std::string_view, kFeatureCount> kNames = {
      "tone",
      "stress",
      "syllabic",
      "short",
      "long",
      "consonantal",
      "sonorant",
      "continuant",
      "delayedRelease",
      "approximant",
      "tap",
      "trill",
      "nasal",
      "lateral",
      "labial",
      "round",
      "labiodental",
      "coronal",
      "anterior",
      "distributed",
      "strident",
      "dorsal",
      "high",
      "low",
      "front",
      "back",
      "tense",
      "retractedTongueRoot",
      "advancedTongueRoot",
      "periodicGlottalSource",
      "epilaryngealSource",
      "spreadGlottis",
      "constrictedGlottis",
      "fortis",
      "raisedLarynxEjective",
      "loweredLarynxImplosive",
      "click",
  };
  return kNames;
}

std::size_t canonical_feature_index(std::string_view name) {
  const auto& names = canonical_feature_names();
  auto it = std::find(names.begin(), names.end(), name);
  return static_cast<std::size_t>(it - names.begin());
}

FeatureValue FeatureValue::parse(std::string_view token) {
  if (token.empty()) throw InputError("empty feature value");
  std::vector<std::string_view> parts = split(token, ',');
  std::set<std::string_view> seen;
  for (std::string_view part : parts) {
    if (part != "+" && part != "-" && part != "0") {
      throw InputError("invalid feature value '" + std::string(token) + "'");
    }
    if (!seen.insert(part).second) {
      throw InputError("repeated component in feature value '" +
                       std::string(token) + "'");
    }
  }
  return FeatureValue(std::string(token));
}

std::vector<char> FeatureValue::components() const {
  std::vector<char> out;
  for (char c : token_) {
    if (c != ',') out.push_back(c);
  }
  return out;
}

const PhoneFeatures* FeatureTable::find(std::string_view nfc_symbol) const {
  auto it = entries_.find(nfc_symbol);
  return it == entries_.end() ? nullptr : &it->second;
}

void FeatureTable::add(PhoneFeatures phone) {
  phone.symbol = unicode::nfc(phone.symbol);
  if (phone.symbol.empty()) throw InputError("empty segment symbol");
  std::string key = phone.symbol;
  if (!entries_.emplace(key, std::move(phone)).second) {
    throw InputError("duplicate segment '" + key + "'");
  }
}

FeatureTableParse parse_feature_table(std::string_view text, char delimiter,
                                      std::string_view source) {
  const std::string src(source);
  if (!unicode::is_valid_utf8(text)) {
    throw InputError(src + ": invalid UTF-8");
  }
  std::vector<Line> lines = split_lines(text);
  auto first = std::find_if(lines.begin(), lines.end(),
                            [](const Line& l) { return !is_blank(l.text); });
  if (first == lines.end()) throw InputError(src + ": empty feature table");

  FeatureTableParse result;
  std::vector<std::string> header = split_record(first->text, delimiter);
  // column_for[f] = column holding canonical feature f.
  std::array<std::size_t, kFeatureCount> column_for;
  column_for.fill(0);
  std::vector<std::string> extras;
  std::set<std::string> seen_names;
  for (std::size_t col = 1; col < header.size(); ++col) {
    std::string name(trim(header[col]));
    if (!seen_names.insert(name).second) {
      throw ParseError(src, first->number, "duplicate column '" + name + "'");
    }
    std::size_t f = canonical_feature_index(name);
    if (f == kFeatureCount) {
      extras.push_back(name);
    } else {
      column_for[f] = col;
    }
  }
  std::vector<std::string> missing;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    if (column_for[f] == 0) {
      missing.emplace_back(canonical_feature_names()[f]);
    }
  }
  if (!missing.empty()) {
    throw ParseError(src, first->number,
                     "header is missing features: " + join(missing, ", "));
  }
  if (!extras.empty()) {
    result.warnings.push_back(src + ": ignoring extra columns: " +
                              join(extras, ", "));
  }

  std::map<std::string, std::size_t> line_of;
  for (auto it = first + 1; it != lines.end(); ++it) {
    if (is_blank(it->text)) continue;
    std::vector<std::string> cells;
    try {
      cells = split_record(it->text, delimiter);
    } catch (const InputError& e) {
      throw ParseError(src, it->number, e.what());
    }
    if (cells.size() != header.size()) {
      throw ParseError(src, it->number,
                       "expected " + std::to_string(header.size()) +
                           " columns, found " + std::to_string(cells.size()));
    }
    PhoneFeatures phone;
    phone.symbol = unicode::nfc(trim(cells[0]));
    if (phone.symbol.empty()) {
      throw ParseError(src, it->number, "empty segment symbol");
    }
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      try {
        phone.values[f] = FeatureValue::parse(trim(cells[column_for[f]]));
      } catch (const InputError& e) {
        throw ParseError(src, it->number,
                         std::string(canonical_feature_names()[f]) + ": " +
                             e.what());
      }
    }
    auto [pos, inserted] = line_of.emplace(phone.symbol, it->number);
    if (!inserted) {
      throw ParseError(src, it->number,
                       "duplicate segment '" + phone.symbol +
                           "' (first defined on line " +
                           std::to_string(pos->second) + ")");
    }
    result.table.add(std::move(phone));
  }
  return result;
}

std::string serialize_feature_table(const FeatureTable& table,
                                    char delimiter) {
  std::string out = "segment";
  for (std::string_view name : canonical_feature_names()) {
    out += delimiter;
    out += name;
  }
  out += '\n';
  for (const auto& [symbol, phone] : table.entries()) {
    out += quote_field(symbol, delimiter);
    for (const FeatureValue& v : phone.values) {
      out += delimiter;
      out += quote_field(v.token(), delimiter);
    }
    out += '\n';
  }
  return out;
}

int feature_similarity(const PhoneFeatures& a, const PhoneFeatures& b) {
  int same = 0;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    if (a.values[f] == b.values[f]) ++same;
  }
  return same;
}

std::vector<std::string> differing_features(const PhoneFeatures& a,
                                            const PhoneFeatures& b) {
  std::vector<std::string> out;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    if (a.values[f] != b.values[f]) {
      out.emplace_back(canonical_feature_names()[f]);
    }
  }
  return out;
}

UnknownSymbolError::UnknownSymbolError(std::string symbol,
                                       std::vector<std::string> chain)
    : InputError([&] {
        std::string msg = "unknown segment '" + symbol + "' (" +
                          unicode::describe_codepoints(symbol) + ")";
        if (!chain.empty()) msg += "; fallback tried: " + join(chain, " -> ");
        return msg;
      }()),
      symbol_(std::move(symbol)),
      chain_(std::move(chain)) {}

LookupResult lookup(const FeatureTable& table, std::string_view symbol,
                    FallbackPolicy policy) {
  std::string normalized = unicode::nfc(symbol);
  LookupResult result;
  if ((result.features = table.find(normalized)) != nullptr) return result;
  if (policy == FallbackPolicy::kNone) {
    throw UnknownSymbolError(normalized, {});
  }
  std::u32string cps = unicode::to_codepoints(unicode::nfd(normalized));
  // The leading codepoint is the base and is never stripped.
  for (std::size_t i = cps.size(); i-- > 1;) {
    if (!unicode::is_modifier(cps[i])) continue;
    cps.erase(i, 1);
    std::string candidate = unicode::nfc(unicode::from_codepoints(cps));
    result.fallback_chain.push_back(candidate);
    if ((result.features = table.find(candidate)) != nullptr) {
      result.used_fallback = true;
      return result;
    }
  }
  throw UnknownSymbolError(normalized, std::move(result.fallback_chain));
}

}  // namespace phonxfer
