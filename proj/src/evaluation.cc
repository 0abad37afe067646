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

#include "phonxfer/evaluation.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "phonxfer/error.h"
#include "phonxfer/text_io.h"
#include "phonxfer/unicode.h"

namespace phonxfer {

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  // Single-row dynamic programme over b.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({sub, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  return edit_distance(unicode::to_codepoints(a), unicode::to_codepoints(b));
}

double cer(std::string_view hypothesis, std::string_view reference) {
  std::u32string ref = unicode::to_codepoints(reference);
  if (ref.empty()) throw InputError("CER needs a non-empty reference");
  return static_cast<double>(
             edit_distance(unicode::to_codepoints(hypothesis), ref)) /
         static_cast<double>(ref.size());
}

double cer_increase_gt(double synth_cer, double gt_cer) {
  return 100.0 * synth_cer - 100.0 * gt_cer;
}

Transcripts parse_transcripts(std::string_view text, std::string_view source) {
  const std::string src(source);
  Transcripts out;
  std::set<std::string, std::less<>> seen;
  for (const Line& line : split_lines(text)) {
    if (is_blank(line.text)) continue;
    if (!unicode::is_valid_utf8(line.text)) {
      throw ParseError(src, line.number, "invalid UTF-8");
    }
    std::size_t tab = line.text.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(src, line.number, "expected a TAB separator");
    }
    std::string id(trim(line.text.substr(0, tab)));
    if (id.empty()) throw ParseError(src, line.number, "empty utterance id");
    if (!seen.insert(id).second) {
      throw ParseError(src, line.number, "duplicate utterance id '" + id + "'");
    }
    out.emplace_back(std::move(id), std::string(line.text.substr(tab + 1)));
  }
  return out;
}

ManifestTranscriptProvider::ManifestTranscriptProvider(Transcripts transcripts)
    : transcripts_(std::move(transcripts)) {
  for (std::size_t i = 0; i < transcripts_.size(); ++i) {
    if (!index_.emplace(transcripts_[i].first, i).second) {
      throw InputError("duplicate transcript id '" + transcripts_[i].first +
                       "'");
    }
  }
}

std::optional<std::string> ManifestTranscriptProvider::transcript(
    std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return transcripts_[it->second].second;
}

std::vector<std::string> ManifestTranscriptProvider::ids() const {
  std::vector<std::string> out;
  out.reserve(transcripts_.size());
  for (const auto& [id, text] : transcripts_) out.push_back(id);
  return out;
}

namespace {

void check_same_ids(const Transcripts& references,
                    const TranscriptProvider& provider,
                    std::string_view what) {
  std::set<std::string> want;
  for (const auto& [id, text] : references) want.insert(id);
  std::vector<std::string> have_list = provider.ids();
  std::set<std::string> have(have_list.begin(), have_list.end());
  for (const std::string& id : want) {
    if (have.count(id) == 0) {
      throw InputError(std::string(what) + " transcripts lack id '" + id + "'");
    }
  }
  for (const std::string& id : have) {
    if (want.count(id) == 0) {
      throw InputError(std::string(what) + " transcripts have id '" + id +
                       "' with no reference");
    }
  }
}

double mean_of(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

}  // namespace

CerReport build_cer_report(const Transcripts& references,
                           const TranscriptProvider& synthesized,
                           const TranscriptProvider* ground_truth) {
  if (references.empty()) throw InputError("no reference transcripts");
  check_same_ids(references, synthesized, "synthesized");
  if (ground_truth != nullptr) {
    check_same_ids(references, *ground_truth, "ground-truth");
  }
  CerReport report;
  std::vector<double> cers, gts, increases;
  for (const auto& [id, text] : references) {
    std::string ref = normalize_text(text);
    if (ref.empty()) {
      throw InputError("reference for '" + id + "' is empty after "
                       "normalization");
    }
    CerRow row;
    row.id = id;
    row.cer = cer(normalize_text(*synthesized.transcript(id)), ref);
    cers.push_back(row.cer);
    if (ground_truth != nullptr) {
      row.gt_cer = cer(normalize_text(*ground_truth->transcript(id)), ref);
      row.increase_gt = cer_increase_gt(row.cer, *row.gt_cer);
      gts.push_back(*row.gt_cer);
      increases.push_back(*row.increase_gt);
    }
    report.rows.push_back(std::move(row));
  }
  report.mean_cer = mean_of(cers);
  if (ground_truth != nullptr) {
    report.mean_gt_cer = mean_of(gts);
    report.mean_increase_gt = mean_of(increases);
  }
  return report;
}

std::string serialize_cer_report(const CerReport& report) {
  const bool with_gt = report.mean_increase_gt.has_value();
  std::string out = with_gt ? "id\tcer\tgt_cer\tincrease_gt\n" : "id\tcer\n";
  auto emit = [&](const std::string& id, double c, std::optional<double> g,
                  std::optional<double> inc) {
    out += id + '\t' + format_fixed(c, 6);
    if (with_gt) {
      out += '\t' + format_fixed(*g, 6) + '\t' + format_fixed(*inc, 6);
    }
    out += '\n';
  };
  for (const CerRow& row : report.rows) {
    emit(row.id, row.cer, row.gt_cer, row.increase_gt);
  }
  emit("MEAN", report.mean_cer, report.mean_gt_cer, report.mean_increase_gt);
  return out;
}

namespace {

// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % bound;
}

// Dense per-utterance phone counts over a shared symbol index.
struct PoolIndex {
  std::vector<std::string> symbols;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> utterance_counts;
};

PoolIndex index_pool(const Corpus& pool) {
  PoolIndex idx;
  std::map<std::string, std::size_t, std::less<>> id_of;
  for (const Utterance& u : pool.utterances) {
    for (const std::string& p : u.phones) id_of.emplace(p, 0);
  }
  for (auto& [p, id] : id_of) {
    id = idx.symbols.size();
    idx.symbols.push_back(p);
  }
  for (const Utterance& u : pool.utterances) {
    std::map<std::size_t, std::size_t> counts;
    for (const std::string& p : u.phones) ++counts[id_of.find(p)->second];
    idx.utterance_counts.emplace_back(counts.begin(), counts.end());
  }
  return idx;
}

AspfScore score_subset(const PoolIndex& idx,
                       const std::vector<std::size_t>& subset,
                       const WeightMap& reference,
                       std::vector<std::size_t>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  std::size_t total = 0;
  for (std::size_t u : subset) {
    for (const auto& [sym, n] : idx.utterance_counts[u]) {
      scratch[sym] += n;
      total += n;
    }
  }
  if (total == 0) return {};
  WeightMap freqs;
  for (std::size_t s = 0; s < scratch.size(); ++s) {
    if (scratch[s] > 0) {
      freqs.emplace_hint(freqs.end(), idx.symbols[s],
                         static_cast<double>(scratch[s]) /
                             static_cast<double>(total));
    }
  }
  return aspf(freqs, reference);
}

// Advances `c` (ascending k-combination of [0, n)) to its lexicographic
// successor; false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

constexpr std::size_t kMaxExhaustive = 5'000'000;

std::size_t binomial_capped(std::size_t n, std::size_t k) {
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    if (r > static_cast<double>(kMaxExhaustive)) return kMaxExhaustive + 1;
  }
  return static_cast<std::size_t>(r + 0.5);
}

}  // namespace

std::vector<std::size_t> sample_subset(std::uint64_t seed, std::uint64_t trial,
                                       std::size_t population,
                                       std::size_t size) {
  if (size > population) {
    throw InputError("cannot draw " + std::to_string(size) + " of " +
                     std::to_string(population));
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 gen(seq);
  std::vector<std::size_t> perm(population);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + bounded(gen, population - i);
    std::swap(perm[i], perm[j]);
  }
  perm.resize(size);
  std::sort(perm.begin(), perm.end());
  return perm;
}

TestSetSelection select_test_set(const Corpus& pool, const Corpus& reference,
                                 const SelectionOptions& options) {
  const std::size_t n = pool.utterances.size();
  if (options.size < 1) throw InputError("test-set size must be at least 1");
  if (options.size > n) {
    throw InputError("test-set size " + std::to_string(options.size) +
                     " exceeds pool size " + std::to_string(n));
  }
  if (!options.exhaustive && options.trials < 1) {
    throw InputError("trials must be at least 1");
  }
  const PhoneFrequencyVector ref = phone_frequencies(reference);
  const PoolIndex idx = index_pool(pool);
  std::vector<std::size_t> scratch(idx.symbols.size());

  TestSetSelection result;
  std::vector<std::size_t> best;
  bool have_best = false;
  auto consider = [&](std::size_t trial, const std::vector<std::size_t>& s) {
    AspfScore score = score_subset(idx, s, ref.weights(), scratch);
    if (options.record_trace) result.trace.push_back({trial, s, score.value});
    if (!have_best || score.value > result.score.value) {
      have_best = true;
      best = s;
      result.score = score;
    }
    ++result.trials_run;
  };

  if (options.exhaustive) {
    if (binomial_capped(n, options.size) > kMaxExhaustive) {
      throw InputError("exhaustive selection would score more than " +
                       std::to_string(kMaxExhaustive) + " subsets");
    }
    std::vector<std::size_t> c(options.size);
    std::iota(c.begin(), c.end(), std::size_t{0});
    std::size_t t = 0;
    do {
      consider(t++, c);
    } while (next_combination(c, n));
  } else {
    for (std::size_t t = 0; t < options.trials; ++t) {
      consider(t, sample_subset(options.seed, t, n, options.size));
    }
  }
  for (std::size_t i : best) result.ids.push_back(pool.utterances[i].id);
  return result;
}

std::string serialize_selection(const TestSetSelection& selection,
                                const SelectionOptions& options) {
  std::string out;
  out += "# seed=" + std::to_string(options.seed) + "\n";
  out += "# trials=" + std::to_string(selection.trials_run) + "\n";
  out += "# size=" + std::to_string(options.size) + "\n";
  out += std::string("# mode=") +
         (options.exhaustive ? "exhaustive" : "sampled") + "\n";
  out += "# aspf=" + format_fixed(selection.score.value, 6) + "\n";
  for (const std::string& id : selection.ids) out += id + '\n';
  return out;
}

std::string serialize_selection_trace(const TestSetSelection& selection,
                                      const Corpus& pool) {
  std::string out = "trial\taspf\tids\n";
  for (const SelectionTrial& t : selection.trace) {
    std::vector<std::string> ids;
    for (std::size_t i : t.indices) ids.push_back(pool.utterances[i].id);
    out += std::to_string(t.trial) + '\t' + format_fixed(t.score, 6) + '\t' +
           join(ids, ",") + '\n';
  }
  return out;
}

}  // namespace phonxfer
