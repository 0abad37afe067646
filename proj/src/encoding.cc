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

#include "phonxfer/encoding.h"

#include "phonxfer/error.h"
#include "phonxfer/text_io.h"

namespace phonxfer {

const char* to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::kNomap:
      return "nomap";
    case Scenario::kMap:
      return "map";
    case Scenario::kFeature:
      return "feature";
  }
  return "?";
}

Scenario parse_scenario(std::string_view name) {
  if (name == "nomap") return Scenario::kNomap;
  if (name == "map") return Scenario::kMap;
  if (name == "feature") return Scenario::kFeature;
  throw InputError("unknown scenario '" + std::string(name) +
                   "' (expected nomap, map or feature)");
}

int LabelVocabulary::id(std::string_view symbol) const {
  auto it = ids.find(symbol);
  if (it == ids.end()) {
    throw InputError("phone '" + std::string(symbol) +
                     "' is not in the vocabulary");
  }
  return it->second;
}

LabelVocabulary build_vocabulary(Scenario scenario,
                                 const PhoneCounts& source_inventory,
                                 const PhoneCounts& target_inventory,
                                 const PhoneMapping* mapping) {
  std::set<std::string> symbols;
  for (const auto& [p, n] : source_inventory) symbols.insert(p);
  switch (scenario) {
    case Scenario::kNomap:
      for (const auto& [p, n] : target_inventory) symbols.insert(p);
      break;
    case Scenario::kMap:
      if (mapping == nullptr) {
        throw InputError("the map scenario requires a phone mapping");
      }
      for (const auto& [p, n] : target_inventory) {
        const MappingEntry* e = mapping->find(p);
        if (e == nullptr) {
          throw InputError("mapping does not cover target phone '" + p + "'");
        }
        if (source_inventory.count(e->source_phone) == 0) {
          throw InputError("mapping sends '" + p + "' to '" + e->source_phone +
                           "', which is not in the source inventory");
        }
      }
      break;
    case Scenario::kFeature:
      throw InputError("the feature scenario has no label vocabulary");
  }
  LabelVocabulary vocab;
  for (const std::string& s : symbols) {
    const int id = static_cast<int>(vocab.symbols.size());
    vocab.symbols.push_back(s);
    vocab.ids.emplace(s, id);
    if (source_inventory.count(s) == 0) vocab.new_symbol_ids.insert(id);
  }
  return vocab;
}

double encode_feature_value(const FeatureValue& value) {
  double sum = 0.0;
  std::vector<char> parts = value.components();
  for (char c : parts) {
    if (c == '+') sum += 1.0;
    if (c == '-') sum -= 1.0;
  }
  return sum / static_cast<double>(parts.size());
}

FeatureVector37 encode_phone(const PhoneFeatures& phone) {
  FeatureVector37 out;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    out[f] = encode_feature_value(phone.values[f]);
  }
  return out;
}

std::vector<LabelEncodedUtterance> encode_labels(const Corpus& corpus,
                                                 const LabelVocabulary& vocab) {
  std::vector<LabelEncodedUtterance> rows;
  rows.reserve(corpus.utterances.size());
  for (const Utterance& u : corpus.utterances) {
    LabelEncodedUtterance row{u.id, {}};
    row.labels.reserve(u.phones.size());
    for (const std::string& p : u.phones) {
      auto it = vocab.ids.find(p);
      if (it == vocab.ids.end()) {
        throw InputError("phone '" + p + "' in utterance '" + u.id +
                         "' is not in the vocabulary");
      }
      row.labels.push_back(it->second);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FeatureEncodedUtterance> encode_features(
    const Corpus& corpus, const FeatureTable& table, FallbackPolicy fallback) {
  std::map<std::string, FeatureVector37, std::less<>> cache;
  std::vector<FeatureEncodedUtterance> rows;
  rows.reserve(corpus.utterances.size());
  for (const Utterance& u : corpus.utterances) {
    FeatureEncodedUtterance row{u.id, {}};
    row.vectors.reserve(u.phones.size());
    for (const std::string& p : u.phones) {
      auto it = cache.find(p);
      if (it == cache.end()) {
        try {
          it = cache.emplace(p, encode_phone(*lookup(table, p, fallback).features))
                   .first;
        } catch (const UnknownSymbolError& e) {
          throw InputError("phone '" + p + "' in utterance '" + u.id +
                           "' is not in the feature table: " + e.what());
        }
      }
      row.vectors.push_back(it->second);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PhoneSequence decode_labels(const std::vector<int>& labels,
                            const LabelVocabulary& vocab) {
  PhoneSequence out;
  out.reserve(labels.size());
  for (int id : labels) {
    if (id < 0 || id >= static_cast<int>(vocab.symbols.size())) {
      throw InputError("label " + std::to_string(id) + " out of range");
    }
    out.push_back(vocab.symbols[static_cast<std::size_t>(id)]);
  }
  return out;
}

std::string serialize_vocabulary(const LabelVocabulary& vocab) {
  std::string out;
  for (std::size_t i = 0; i < vocab.symbols.size(); ++i) {
    const bool is_new = vocab.new_symbol_ids.count(static_cast<int>(i)) > 0;
    out += std::to_string(i) + '\t' + vocab.symbols[i] + '\t' +
           (is_new ? "true" : "false") + '\n';
  }
  return out;
}

std::string serialize_labels(const std::vector<LabelEncodedUtterance>& rows) {
  std::string out;
  for (const LabelEncodedUtterance& row : rows) {
    out += row.id;
    out += '\t';
    for (std::size_t i = 0; i < row.labels.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(row.labels[i]);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_features(
    const std::vector<FeatureEncodedUtterance>& rows) {
  std::string out;
  for (const FeatureEncodedUtterance& row : rows) {
    out += row.id;
    out += '\t';
    for (std::size_t i = 0; i < row.vectors.size(); ++i) {
      if (i > 0) out += ';';
      for (std::size_t f = 0; f < kFeatureCount; ++f) {
        if (f > 0) out += ',';
        out += format_shortest(row.vectors[i][f]);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace phonxfer
