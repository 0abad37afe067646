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

#ifndef PHONXFER_EVALUATION_H_
#define PHONXFER_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phonxfer/aspf.h"
#include "phonxfer/lexicon.h"
#include "phonxfer/normalize.h"

namespace phonxfer {

// Levenshtein distance with unit costs over codepoints.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::string_view a, std::string_view b);

// edit_distance(hypothesis, reference) / codepoints(reference). Both are
// expected to be normalized already. Throws InputError for an empty
// reference.
double cer(std::string_view hypothesis, std::string_view reference);

// Percentage points by which a synthesized utterance's CER exceeds the CER
// of the ground-truth recording. CERs are fractions (0.05 == 5%).
double cer_increase_gt(double synth_cer, double gt_cer);

// (id, text) in file order.
using Transcripts = std::vector<std::pair<std::string, std::string>>;

// "id<TAB>text" per line; ids must be unique.
Transcripts parse_transcripts(std::string_view text,
                              std::string_view source = "transcripts");

// Source of recognizer output for an utterance id.
class TranscriptProvider {
 public:
  virtual ~TranscriptProvider() = default;
  virtual std::optional<std::string> transcript(std::string_view id) const = 0;
  virtual std::vector<std::string> ids() const = 0;
};

// Serves transcripts from a prepared "id<TAB>text" manifest.
class ManifestTranscriptProvider : public TranscriptProvider {
 public:
  explicit ManifestTranscriptProvider(Transcripts transcripts);

  std::optional<std::string> transcript(std::string_view id) const override;
  std::vector<std::string> ids() const override;

 private:
  Transcripts transcripts_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct CerRow {
  std::string id;
  double cer = 0.0;
  std::optional<double> gt_cer;
  std::optional<double> increase_gt;  // percentage points
};

struct CerReport {
  std::vector<CerRow> rows;  // reference order
  double mean_cer = 0.0;
  std::optional<double> mean_gt_cer;
  std::optional<double> mean_increase_gt;
};

// Scores every reference utterance. Texts are passed through
// normalize_text first. The providers must cover exactly the reference ids.
CerReport build_cer_report(const Transcripts& references,
                           const TranscriptProvider& synthesized,
                           const TranscriptProvider* ground_truth = nullptr);

// Columns id, cer[, gt_cer, increase_gt]; last row "MEAN".
std::string serialize_cer_report(const CerReport& report);

struct SelectionOptions {
  std::size_t size = 100;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  // Score every size-subset instead of sampling; for tiny pools.
  bool exhaustive = false;
  bool record_trace = false;
};

struct SelectionTrial {
  std::size_t trial = 0;
  std::vector<std::size_t> indices;  // ascending pool positions
  double score = 0.0;
};

struct TestSetSelection {
  std::vector<std::string> ids;  // pool order
  AspfScore score;
  std::size_t trials_run = 0;
  std::vector<SelectionTrial> trace;  // filled when record_trace is set
};

// Indices of the size-subset drawn for `trial`. Each trial has its own
// generator: std::mt19937_64 seeded from std::seed_seq over the 32-bit
// halves of (seed, trial), driving a partial Fisher-Yates shuffle with
// rejection-sampled bounded draws. Returned ascending.
std::vector<std::size_t> sample_subset(std::uint64_t seed, std::uint64_t trial,
                                       std::size_t population,
                                       std::size_t size);

// Picks the size-subset of `pool` whose phone frequencies have the highest
// ASPF against those of `reference`. The earliest trial wins ties; a subset
// without phones scores 0.
TestSetSelection select_test_set(const Corpus& pool, const Corpus& reference,
                                 const SelectionOptions& options);

// Header comments with seed, trials, size, mode and ASPF; then one id per
// line.
std::string serialize_selection(const TestSetSelection& selection,
                                const SelectionOptions& options);

// "trial<TAB>aspf<TAB>ids" per recorded trial.
std::string serialize_selection_trace(const TestSetSelection& selection,
                                      const Corpus& pool);

}  // namespace phonxfer

#endif  // PHONXFER_EVALUATION_H_
