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

#include "phonxfer/lexicon.h"

#include <algorithm>
#include <set>
#include <utility>

#include "phonxfer/error.h"
#include "phonxfer/normalize.h"
#include "phonxfer/text_io.h"
#include "phonxfer/unicode.h"

namespace phonxfer {

namespace {

PhoneSequence parse_phones(std::string_view field, const std::string& src,
                           std::size_t line) {
  PhoneSequence phones;
  std::size_t i = 0;
  while (i < field.size()) {
    std::size_t end = field.find_first_of(" \t", i);
    if (end == std::string_view::npos) end = field.size();
    if (end > i) {
      std::string phone = unicode::nfc(field.substr(i, end - i));
      if (phone == kBoundarySymbol) {
        throw ParseError(src, line, "'#' is reserved and cannot be a phone");
      }
      phones.push_back(std::move(phone));
    }
    i = end + 1;
  }
  return phones;
}

// Yields (line, id, rest) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, const std::string& src, Fn&& fn) {
  for (const Line& line : split_lines(text)) {
    if (is_blank(line.text) || line.text.front() == '#') continue;
    if (!unicode::is_valid_utf8(line.text)) {
      throw ParseError(src, line.number, "invalid UTF-8");
    }
    std::size_t tab = line.text.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(src, line.number, "expected a TAB separator");
    }
    fn(line.number, line.text.substr(0, tab), line.text.substr(tab + 1));
  }
}

Corpus parse_corpus_impl(std::string_view text, std::string language,
                         std::string_view source, bool phonemized) {
  const std::string src(source);
  Corpus corpus{std::move(language), {}};
  std::set<std::string, std::less<>> ids;
  for_each_record(text, src,
                  [&](std::size_t line, std::string_view id,
                      std::string_view rest) {
                    std::string key(trim(id));
                    if (key.empty()) {
                      throw ParseError(src, line, "empty utterance id");
                    }
                    if (!ids.insert(key).second) {
                      throw ParseError(src, line,
                                       "duplicate utterance id '" + key + "'");
                    }
                    Utterance u{key, {}, {}};
                    if (phonemized) {
                      u.phones = parse_phones(rest, src, line);
                    } else {
                      u.text = std::string(rest);
                    }
                    corpus.utterances.push_back(std::move(u));
                  });
  return corpus;
}

}  // namespace

const PhoneSequence* PronunciationDictionary::first_pronunciation(
    std::string_view word) const {
  auto it = entries.find(word);
  return it == entries.end() ? nullptr : &it->second.front();
}

PronunciationDictionary parse_dictionary(std::string_view text,
                                         std::string language,
                                         std::string_view source) {
  const std::string src(source);
  PronunciationDictionary dict{std::move(language), {}};
  for_each_record(text, src,
                  [&](std::size_t line, std::string_view word,
                      std::string_view rest) {
                    std::string key = normalize_text(word);
                    if (key.empty()) {
                      throw ParseError(src, line, "empty word");
                    }
                    if (key.find(' ') != std::string::npos) {
                      throw ParseError(src, line,
                                       "word '" + key + "' contains spaces");
                    }
                    PhoneSequence phones = parse_phones(rest, src, line);
                    if (phones.empty()) {
                      throw ParseError(src, line,
                                       "empty pronunciation for '" + key + "'");
                    }
                    dict.entries[key].push_back(std::move(phones));
                  });
  return dict;
}

Corpus parse_corpus(std::string_view text, std::string language,
                    std::string_view source) {
  return parse_corpus_impl(text, std::move(language), source, false);
}

Corpus parse_phonemized_corpus(std::string_view text, std::string language,
                               std::string_view source) {
  return parse_corpus_impl(text, std::move(language), source, true);
}

std::string serialize_phonemized(const Corpus& corpus) {
  std::string out;
  for (const Utterance& u : corpus.utterances) {
    out += u.id;
    out += '\t';
    out += join(u.phones, " ");
    out += '\n';
  }
  return out;
}

PhonemizeResult phonemize(const Corpus& corpus,
                          const PronunciationDictionary& dict,
                          OovPolicy policy) {
  PhonemizeResult result;
  result.corpus.language = corpus.language;
  for (const Utterance& u : corpus.utterances) {
    Utterance out{u.id, u.text, {}};
    bool skip = false;
    std::string normalized = normalize_text(u.text);
    for (std::string_view token : split(normalized, ' ')) {
      if (token.empty()) continue;
      if (const PhoneSequence* pron = dict.first_pronunciation(token)) {
        out.phones.insert(out.phones.end(), pron->begin(), pron->end());
        continue;
      }
      if (policy == OovPolicy::kError) {
        throw InputError("out-of-vocabulary token '" + std::string(token) +
                         "' in utterance '" + u.id + "'");
      }
      ++result.report.oov_counts[std::string(token)];
      if (policy == OovPolicy::kSkipUtterance) skip = true;
    }
    if (skip) {
      result.report.skipped_utterances.push_back(u.id);
    } else {
      result.corpus.utterances.push_back(std::move(out));
    }
  }
  return result;
}

std::string serialize_oov_report(const PhonemizeReport& report) {
  std::vector<std::pair<std::string, std::size_t>> rows(
      report.oov_counts.begin(), report.oov_counts.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::string out;
  for (const auto& [token, count] : rows) {
    out += token + '\t' + std::to_string(count) + '\n';
  }
  return out;
}

PhoneCounts phone_inventory(const Corpus& corpus) {
  PhoneCounts counts;
  for (const Utterance& u : corpus.utterances) {
    for (const std::string& p : u.phones) ++counts[p];
  }
  if (counts.empty()) {
    throw InputError("corpus '" + corpus.language +
                     "' has no phonemized utterances");
  }
  return counts;
}

PhoneFrequencyVector PhoneFrequencyVector::from_counts(
    const PhoneCounts& counts) {
  PhoneFrequencyVector v;
  for (const auto& [phone, n] : counts) v.total_count_ += n;
  if (v.total_count_ == 0) return v;
  const double total = static_cast<double>(v.total_count_);
  for (const auto& [phone, n] : counts) {
    if (n > 0) v.weights_.emplace(phone, static_cast<double>(n) / total);
  }
  return v;
}

double PhoneFrequencyVector::weight(std::string_view phone) const {
  auto it = weights_.find(phone);
  return it == weights_.end() ? 0.0 : it->second;
}

PhoneFrequencyVector phone_frequencies(const Corpus& corpus) {
  return PhoneFrequencyVector::from_counts(phone_inventory(corpus));
}

namespace {

struct ContextCounts {
  PhoneCounts front;
  PhoneCounts back;
};

void count_contexts(const Corpus& corpus, BoundaryMode mode,
                    const std::string* only,
                    std::map<std::string, ContextCounts, std::less<>>& out) {
  const std::string boundary(kBoundarySymbol);
  for (const Utterance& u : corpus.utterances) {
    const PhoneSequence& ph = u.phones;
    for (std::size_t i = 0; i < ph.size(); ++i) {
      if (only != nullptr && ph[i] != *only) continue;
      ContextCounts& c = out[ph[i]];
      if (i > 0) {
        ++c.front[ph[i - 1]];
      } else if (mode == BoundaryMode::kBoundarySymbol) {
        ++c.front[boundary];
      }
      if (i + 1 < ph.size()) {
        ++c.back[ph[i + 1]];
      } else if (mode == BoundaryMode::kBoundarySymbol) {
        ++c.back[boundary];
      }
    }
  }
}

}  // namespace

ContextProfile context_profile(const Corpus& corpus, std::string_view phone,
                               BoundaryMode mode) {
  const std::string target = unicode::nfc(phone);
  std::map<std::string, ContextCounts, std::less<>> counts;
  count_contexts(corpus, mode, &target, counts);
  auto it = counts.find(target);
  if (it == counts.end()) {
    throw InputError("phone '" + target + "' does not occur in corpus '" +
                     corpus.language + "'");
  }
  return {target, PhoneFrequencyVector::from_counts(it->second.front),
          PhoneFrequencyVector::from_counts(it->second.back)};
}

std::map<std::string, ContextProfile, std::less<>> context_profiles(
    const Corpus& corpus, BoundaryMode mode) {
  std::map<std::string, ContextCounts, std::less<>> counts;
  count_contexts(corpus, mode, nullptr, counts);
  std::map<std::string, ContextProfile, std::less<>> out;
  for (const auto& [phone, c] : counts) {
    out.emplace(phone,
                ContextProfile{phone, PhoneFrequencyVector::from_counts(c.front),
                               PhoneFrequencyVector::from_counts(c.back)});
  }
  return out;
}

const char* to_string(OovPolicy policy) {
  switch (policy) {
    case OovPolicy::kError:
      return "error";
    case OovPolicy::kSkipWord:
      return "skip-word";
    case OovPolicy::kSkipUtterance:
      return "skip-utterance";
  }
  return "?";
}

const char* to_string(BoundaryMode mode) {
  return mode == BoundaryMode::kSkip ? "skip" : "boundary-symbol";
}

OovPolicy parse_oov_policy(std::string_view name) {
  if (name == "error") return OovPolicy::kError;
  if (name == "skip-word") return OovPolicy::kSkipWord;
  if (name == "skip-utterance") return OovPolicy::kSkipUtterance;
  throw InputError("unknown OOV policy '" + std::string(name) +
                   "' (expected error, skip-word or skip-utterance)");
}

BoundaryMode parse_boundary_mode(std::string_view name) {
  if (name == "skip") return BoundaryMode::kSkip;
  if (name == "boundary-symbol") return BoundaryMode::kBoundarySymbol;
  throw InputError("unknown boundary mode '" + std::string(name) +
                   "' (expected skip or boundary-symbol)");
}

}  // namespace phonxfer
