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

#include "phonxfer/mapping.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "phonxfer/error.h"
#include "phonxfer/text_io.h"
#include "phonxfer/unicode.h"

namespace phonxfer {

namespace {

constexpr std::string_view kMappingHeader =
    "target_phone\tsource_phone\tsimilarity\ttied_candidates\taspf_front\t"
    "aspf_back\taspf_averaged\tself_mapped";

const PhoneFeatures& resolve(const FeatureTable& table,
                             const std::string& phone,
                             const std::string& language,
                             FallbackPolicy policy) {
  try {
    return *lookup(table, phone, policy).features;
  } catch (const UnknownSymbolError& e) {
    throw InputError("phone '" + phone + "' of language '" + language +
                     "' is not in the feature table: " + e.what());
  }
}

const ContextProfile& profile_of(const MappingSide& side,
                                 const std::string& phone) {
  static const ContextProfile kEmpty;
  auto it = side.profiles.find(phone);
  return it == side.profiles.end() ? kEmpty : it->second;
}

double parse_double(std::string_view s, const std::string& src,
                    std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(src, line, "invalid number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

const MappingEntry* PhoneMapping::find(std::string_view target_phone) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), target_phone,
      [](const MappingEntry& e, std::string_view p) {
        return e.target_phone < p;
      });
  return it != entries.end() && it->target_phone == target_phone ? &*it
                                                                 : nullptr;
}

MappingSide make_mapping_side(const Corpus& corpus, BoundaryMode mode) {
  return {corpus.language, phone_inventory(corpus),
          context_profiles(corpus, mode)};
}

PhoneMapping build_mapping(const MappingSide& target, const MappingSide& source,
                           const FeatureTable& table,
                           const MappingOptions& options) {
  if (source.inventory.empty()) {
    throw InputError("source language '" + source.language +
                     "' has an empty inventory");
  }
  PhoneMapping mapping{target.language, source.language, {}, {}};

  std::vector<std::pair<std::string, const PhoneFeatures*>> source_phones;
  for (const auto& [phone, count] : source.inventory) {
    source_phones.emplace_back(
        phone, &resolve(table, phone, source.language, options.fallback));
  }

  for (const auto& [phone, count] : target.inventory) {
    MappingEntry entry;
    entry.target_phone = phone;
    const PhoneFeatures& features =
        resolve(table, phone, target.language, options.fallback);

    if (source.inventory.count(phone) > 0) {
      entry.source_phone = phone;
      entry.similarity = static_cast<int>(kFeatureCount);
      entry.self_mapped = true;
      mapping.entries.push_back(std::move(entry));
      continue;
    }

    int best = -1;
    std::vector<std::string> top;  // codepoint order, inherited from the map
    for (const auto& [candidate, cf] : source_phones) {
      const int sim = feature_similarity(features, *cf);
      if (sim > best) {
        best = sim;
        top.clear();
      }
      if (sim == best) top.push_back(candidate);
    }
    entry.similarity = best;

    if (top.size() == 1) {
      entry.source_phone = top.front();
      mapping.entries.push_back(std::move(entry));
      continue;
    }

    const ContextProfile& mine = profile_of(target, phone);
    double best_avg = -1.0;
    for (const std::string& candidate : top) {
      ContextAspf score =
          context_aspf_or_zero(mine, profile_of(source, candidate));
      best_avg = std::max(best_avg, score.averaged);
      entry.candidate_scores.push_back({candidate, score});
    }
    std::vector<const CandidateScore*> leaders;
    for (const CandidateScore& cs : entry.candidate_scores) {
      if (cs.context.averaged >= best_avg - options.tie_tolerance) {
        leaders.push_back(&cs);
      }
    }
    entry.source_phone = leaders.front()->symbol;
    entry.tie_break = leaders.front()->context;
    entry.tied_candidates = std::move(top);
    if (leaders.size() > 1) {
      entry.residual_tie = true;
      std::vector<std::string> names;
      for (const CandidateScore* cs : leaders) names.push_back(cs->symbol);
      mapping.warnings.push_back(
          "'" + phone + "': candidates " + join(names, ", ") +
          " share averaged ASPF " + format_fixed(best_avg, 6) + "; chose '" +
          entry.source_phone + "' by codepoint order");
    }
    mapping.entries.push_back(std::move(entry));
  }
  return mapping;
}

PhoneMapping build_mapping(const Corpus& target, const Corpus& source,
                           const FeatureTable& table, BoundaryMode mode,
                           const MappingOptions& options) {
  return build_mapping(make_mapping_side(target, mode),
                       make_mapping_side(source, mode), table, options);
}

Corpus apply_mapping(const Corpus& corpus, const PhoneMapping& mapping) {
  Corpus out = corpus;
  for (Utterance& u : out.utterances) {
    for (std::string& p : u.phones) {
      const MappingEntry* e = mapping.find(p);
      if (e == nullptr) {
        throw InputError("phone '" + p + "' in utterance '" + u.id +
                         "' is not covered by the mapping");
      }
      p = e->source_phone;
    }
  }
  return out;
}

std::string serialize_mapping(const PhoneMapping& mapping) {
  std::string out(kMappingHeader);
  out += '\n';
  for (const MappingEntry& e : mapping.entries) {
    std::vector<std::string> cells = {e.target_phone, e.source_phone,
                                      std::to_string(e.similarity),
                                      join(e.tied_candidates, ",")};
    if (e.tie_break) {
      cells.push_back(format_fixed(e.tie_break->front.value, 6));
      cells.push_back(format_fixed(e.tie_break->back.value, 6));
      cells.push_back(format_fixed(e.tie_break->averaged, 6));
    } else {
      cells.insert(cells.end(), 3, "");
    }
    cells.push_back(e.self_mapped ? "true" : "false");
    out += join(cells, "\t");
    out += '\n';
  }
  return out;
}

PhoneMapping parse_mapping(std::string_view text, std::string_view source) {
  const std::string src(source);
  PhoneMapping mapping;
  bool seen_header = false;
  std::set<std::string> targets;
  for (const Line& line : split_lines(text)) {
    if (is_blank(line.text)) continue;
    if (!seen_header) {
      if (line.text != kMappingHeader) {
        throw ParseError(src, line.number, "unexpected mapping header");
      }
      seen_header = true;
      continue;
    }
    std::vector<std::string_view> cells = split(line.text, '\t');
    if (cells.size() != 8) {
      throw ParseError(src, line.number,
                       "expected 8 columns, found " +
                           std::to_string(cells.size()));
    }
    MappingEntry e;
    e.target_phone = unicode::nfc(cells[0]);
    e.source_phone = unicode::nfc(cells[1]);
    if (e.target_phone.empty() || e.source_phone.empty()) {
      throw ParseError(src, line.number, "empty phone");
    }
    const double sim = parse_double(cells[2], src, line.number);
    if (sim < 0 || sim > static_cast<double>(kFeatureCount) ||
        sim != static_cast<int>(sim)) {
      throw ParseError(src, line.number, "similarity out of range");
    }
    e.similarity = static_cast<int>(sim);
    if (!cells[3].empty()) {
      for (std::string_view c : split(cells[3], ',')) {
        e.tied_candidates.push_back(unicode::nfc(c));
      }
    }
    const bool has_scores = !cells[6].empty();
    if (has_scores != !e.tied_candidates.empty()) {
      throw ParseError(src, line.number,
                       "ASPF columns must be present exactly when there are "
                       "tied candidates");
    }
    if (has_scores) {
      ContextAspf c;
      c.front.value = parse_double(cells[4], src, line.number);
      c.back.value = parse_double(cells[5], src, line.number);
      c.averaged = parse_double(cells[6], src, line.number);
      e.tie_break = c;
    }
    if (cells[7] != "true" && cells[7] != "false") {
      throw ParseError(src, line.number, "self_mapped must be true or false");
    }
    e.self_mapped = cells[7] == "true";
    if (!targets.insert(e.target_phone).second) {
      throw ParseError(src, line.number,
                       "duplicate target phone '" + e.target_phone + "'");
    }
    mapping.entries.push_back(std::move(e));
  }
  if (!seen_header) throw InputError(src + ": empty mapping file");
  std::sort(mapping.entries.begin(), mapping.entries.end(),
            [](const MappingEntry& a, const MappingEntry& b) {
              return a.target_phone < b.target_phone;
            });
  return mapping;
}

}  // namespace phonxfer
