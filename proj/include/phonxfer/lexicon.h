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

#ifndef PHONXFER_LEXICON_H_
#define PHONXFER_LEXICON_H_

// Pronunciation dictionaries, corpora, phonemization and the phone
// statistics derived from phonemized corpora.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace phonxfer {

using PhoneSequence = std::vector<std::string>;
using PhoneCounts = std::map<std::string, std::size_t, std::less<>>;

// Reserved context symbol for utterance edges.
inline constexpr std::string_view kBoundarySymbol = "#";

struct PronunciationDictionary {
  std::string language;
  // Normalized word -> pronunciations in file order (never empty).
  std::map<std::string, std::vector<PhoneSequence>, std::less<>> entries;

  const PhoneSequence* first_pronunciation(std::string_view word) const;
};

// "word<TAB>phone phone ..." per line; '#' lines are comments. Words are
// keyed by normalize_text(word).
PronunciationDictionary parse_dictionary(std::string_view text,
                                         std::string language,
                                         std::string_view source = "dictionary");

struct Utterance {
  std::string id;
  std::string text;
  PhoneSequence phones;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

struct Corpus {
  std::string language;
  std::vector<Utterance> utterances;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// "id<TAB>text" per line; ids must be unique.
Corpus parse_corpus(std::string_view text, std::string language,
                    std::string_view source = "corpus");

// "id<TAB>phone phone ..." per line; the phone list may be empty.
Corpus parse_phonemized_corpus(std::string_view text, std::string language,
                               std::string_view source = "corpus");

std::string serialize_phonemized(const Corpus& corpus);

enum class OovPolicy { kError, kSkipWord, kSkipUtterance };

struct PhonemizeReport {
  std::map<std::string, std::size_t> oov_counts;
  std::vector<std::string> skipped_utterances;
};

struct PhonemizeResult {
  Corpus corpus;
  PhonemizeReport report;
};

// Replaces each utterance's phones with the first pronunciation of every
// token of normalize_text(text).
PhonemizeResult phonemize(const Corpus& corpus,
                          const PronunciationDictionary& dict,
                          OovPolicy policy = OovPolicy::kSkipUtterance);

// "token<TAB>count", count descending then token ascending.
std::string serialize_oov_report(const PhonemizeReport& report);

// Occurrence counts of every phone in the corpus. Throws InputError when no
// utterance carries phones.
PhoneCounts phone_inventory(const Corpus& corpus);

// Relative frequencies keyed by phone. Absent phones are implicitly zero;
// a default-constructed vector is the zero vector.
class PhoneFrequencyVector {
 public:
  PhoneFrequencyVector() = default;

  static PhoneFrequencyVector from_counts(const PhoneCounts& counts);

  const std::map<std::string, double, std::less<>>& weights() const {
    return weights_;
  }
  std::size_t total_count() const { return total_count_; }
  bool is_zero() const { return total_count_ == 0; }
  double weight(std::string_view phone) const;

 private:
  std::map<std::string, double, std::less<>> weights_;
  std::size_t total_count_ = 0;
};

// Throws InputError when the corpus has no phone occurrences.
PhoneFrequencyVector phone_frequencies(const Corpus& corpus);

enum class BoundaryMode { kSkip, kBoundarySymbol };

struct ContextProfile {
  std::string phone;
  PhoneFrequencyVector front;  // phones immediately preceding
  PhoneFrequencyVector back;   // phones immediately following
};

// Throws InputError when `phone` does not occur in the corpus.
ContextProfile context_profile(const Corpus& corpus, std::string_view phone,
                               BoundaryMode mode = BoundaryMode::kSkip);

// Profiles for every phone of the corpus in a single pass.
std::map<std::string, ContextProfile, std::less<>> context_profiles(
    const Corpus& corpus, BoundaryMode mode = BoundaryMode::kSkip);

const char* to_string(OovPolicy policy);
const char* to_string(BoundaryMode mode);
// Throw InputError for unknown names.
OovPolicy parse_oov_policy(std::string_view name);
BoundaryMode parse_boundary_mode(std::string_view name);

}  // namespace phonxfer

#endif  // PHONXFER_LEXICON_H_
