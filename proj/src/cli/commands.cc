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

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "phonxfer/aspf.h"
#include "phonxfer/cli.h"
#include "phonxfer/encoding.h"
#include "phonxfer/error.h"
#include "phonxfer/evaluation.h"
#include "phonxfer/langtree.h"
#include "phonxfer/lexicon.h"
#include "phonxfer/mapping.h"
#include "phonxfer/phoible.h"
#include "phonxfer/text_io.h"

namespace phonxfer::cli {

namespace {

namespace fs = std::filesystem;

struct OptionSpec {
  const char* key;
  const char* help;
  bool repeatable = false;
  bool flag = false;
  const char* fallback = nullptr;  // default value, if any
};

// Every key accepted on the command line or in a config file.
const std::vector<OptionSpec>& option_specs() {
  static const std::vector<OptionSpec> kSpecs = {
      {"out", "output directory", false, false, "phonxfer-out"},
      {"seed", "random seed", false, false, "1"},
      {"target", "target language NAME=CORPUS[,DICT]", true},
      {"source", "source language NAME=CORPUS[,DICT] (repeatable)", true},
      {"feature-table", "PHOIBLE-style segment feature table"},
      {"feature-delimiter", "feature table delimiter: comma or tab", false,
       false, "comma"},
      {"fallback", "unknown-segment policy: none or strip-modifiers", false,
       false, "none"},
      {"oov-policy", "error, skip-word or skip-utterance", false, false,
       "skip-utterance"},
      {"boundary-mode", "context at utterance edges: skip or boundary-symbol",
       false, false, "skip"},
      {"scenario", "encoding scenario: nomap, map or feature"},
      {"mapping", "mapping file written by 'map'"},
      {"tree", "language family tree file"},
      {"pair", "node pair A,B (repeatable; default: all language pairs)",
       true},
      {"pool", "utterance pool NAME=CORPUS[,DICT]"},
      {"reference", "reference data NAME=CORPUS[,DICT]"},
      {"size", "test-set size", false, false, "100"},
      {"trials", "number of random subsets", false, false, "10000"},
      {"exhaustive", "score every subset instead of sampling", false, true},
      {"trace", "write every trial's score", false, true},
      {"hyp", "transcripts of synthesized audio (id<TAB>text)"},
      {"ref", "reference texts (id<TAB>text)"},
      {"gt", "transcripts of ground-truth audio (id<TAB>text)"},
  };
  return kSpecs;
}

const OptionSpec& spec_for(std::string_view key) {
  for (const OptionSpec& s : option_specs()) {
    if (key == s.key) return s;
  }
  throw std::logic_error("no option spec for " + std::string(key));
}

std::string utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Resolved settings plus bookkeeping for one command run.
class Context {
 public:
  Context(std::string command, std::map<std::string, std::vector<std::string>>
                                   resolved,
          std::ostream& out, std::ostream& err)
      : values_(std::move(resolved)), out(out), err(err) {
    manifest_.tool_version = PHONXFER_VERSION;
    manifest_.command = std::move(command);
    manifest_.config = values_;
    manifest_.started_at = utc_now();
  }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end() || it->second.empty()) return std::nullopt;
    return it->second.back();
  }

  std::vector<std::string> get_all(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? std::vector<std::string>{} : it->second;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v || v->empty()) throw InputError("missing required --" + key);
    return *v;
  }

  std::uint64_t get_uint(const std::string& key, bool positive) const {
    const std::string text = require(key);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InputError("--" + key + " expects a non-negative integer, got '" +
                       text + "'");
    }
    if (positive && v == 0) throw InputError("--" + key + " must be positive");
    return v;
  }

  bool get_bool(const std::string& key) const {
    auto v = get(key);
    if (!v) return false;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw InputError("--" + key + " expects true or false, got '" + *v + "'");
  }

  // Reads an input file and records its checksum.
  std::string read_input(const std::string& path) {
    if (!fs::exists(path)) throw InputError("input file not found: " + path);
    std::string data = read_file(path);
    if (recorded_.insert(path).second) {
      manifest_.inputs.emplace_back(path, sha256_hex(data));
    }
    return data;
  }

  fs::path out_dir() const { return fs::path(require("out")); }

  void write_output(const std::string& name, std::string_view content) {
    fs::create_directories(out_dir());
    write_file_atomic(out_dir() / name, content);
    manifest_.outputs.push_back(name);
  }

  void warn(const std::string& message) {
    err << "warning: " << message << "\n";
    manifest_.warnings.push_back(message);
  }

  void finish() {
    manifest_.finished_at = utc_now();
    fs::create_directories(out_dir());
    write_file_atomic(out_dir() / ("manifest_" + manifest_.command + ".json"),
                      manifest_.to_json());
  }

 private:
  std::map<std::string, std::vector<std::string>> values_;
  RunManifest manifest_;
  std::set<std::string> recorded_;

 public:
  std::ostream& out;
  std::ostream& err;
};

// ---------------------------------------------------------------------------
// Input loading

struct LanguageInput {
  std::string name;
  std::string corpus_path;
  std::optional<std::string> dict_path;
};

LanguageInput parse_language_spec(const std::string& spec) {
  std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw InputError("language must be NAME=CORPUS[,DICT], got '" + spec + "'");
  }
  LanguageInput in;
  in.name = spec.substr(0, eq);
  std::string rest = spec.substr(eq + 1);
  std::size_t comma = rest.find(',');
  in.corpus_path = rest.substr(0, comma);
  if (comma != std::string::npos) in.dict_path = rest.substr(comma + 1);
  return in;
}

// Loads a phonemized corpus, phonemizing raw text when a dictionary is given.
Corpus load_language(Context& ctx, const std::string& spec,
                     PhonemizeReport* report = nullptr) {
  LanguageInput in = parse_language_spec(spec);
  const std::string corpus_text = ctx.read_input(in.corpus_path);
  if (!in.dict_path) {
    return parse_phonemized_corpus(corpus_text, in.name, in.corpus_path);
  }
  Corpus raw = parse_corpus(corpus_text, in.name, in.corpus_path);
  PronunciationDictionary dict = parse_dictionary(
      ctx.read_input(*in.dict_path), in.name, *in.dict_path);
  PhonemizeResult result =
      phonemize(raw, dict, parse_oov_policy(ctx.require("oov-policy")));
  for (const std::string& id : result.report.skipped_utterances) {
    ctx.warn(in.name + ": skipped utterance '" + id + "' (out-of-vocabulary)");
  }
  if (report != nullptr) *report = result.report;
  return std::move(result.corpus);
}

std::string single_target(const Context& ctx) {
  std::vector<std::string> targets = ctx.get_all("target");
  if (targets.size() != 1) {
    throw InputError("expected exactly one --target, got " +
                     std::to_string(targets.size()));
  }
  return targets.front();
}

std::vector<std::string> sources(const Context& ctx) {
  std::vector<std::string> s = ctx.get_all("source");
  if (s.empty()) throw InputError("at least one --source is required");
  return s;
}

FallbackPolicy fallback_policy(const Context& ctx) {
  const std::string v = ctx.require("fallback");
  if (v == "none") return FallbackPolicy::kNone;
  if (v == "strip-modifiers") return FallbackPolicy::kStripModifiers;
  throw InputError("--fallback must be none or strip-modifiers");
}

FeatureTable load_feature_table(Context& ctx) {
  auto path = ctx.get("feature-table");
  if (!path) {
    throw InputError(std::string("no feature table: pass --feature-table or "
                                 "set ") +
                     kFeatureTableEnv);
  }
  const std::string d = ctx.require("feature-delimiter");
  char delim = ',';
  if (d == "tab") {
    delim = '\t';
  } else if (d != "comma") {
    throw InputError("--feature-delimiter must be comma or tab");
  }
  FeatureTableParse parsed =
      parse_feature_table(ctx.read_input(*path), delim, *path);
  for (const std::string& w : parsed.warnings) ctx.warn(w);
  return std::move(parsed.table);
}

std::string file_safe(std::string name) {
  for (char& c : name) {
    if (c == '/' || c == '\\' || c == ' ' || c == '\t') c = '_';
  }
  return name;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_inventory(Context& ctx) {
  PhonemizeReport report;
  Corpus corpus = load_language(ctx, single_target(ctx), &report);
  PhoneCounts counts = phone_inventory(corpus);
  PhoneFrequencyVector freqs = PhoneFrequencyVector::from_counts(counts);
  std::vector<std::pair<std::string, std::size_t>> rows(counts.begin(),
                                                        counts.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::string table = "phone\tcount\tfrequency\n";
  for (const auto& [phone, n] : rows) {
    table += phone + '\t' + std::to_string(n) + '\t' +
             format_fixed(freqs.weight(phone), 6) + '\n';
  }
  const std::string lang = file_safe(corpus.language);
  ctx.write_output("inventory_" + lang + ".tsv", table);
  ctx.write_output("phonemized_" + lang + ".tsv", serialize_phonemized(corpus));
  ctx.write_output("oov_" + lang + ".tsv", serialize_oov_report(report));
  ctx.out << table;
  return kExitOk;
}

NamedVectors load_frequency_vectors(Context& ctx,
                                    const std::vector<std::string>& specs) {
  NamedVectors out;
  std::set<std::string> names;
  for (const std::string& spec : specs) {
    Corpus c = load_language(ctx, spec);
    if (!names.insert(c.language).second) {
      throw InputError("language '" + c.language + "' given twice");
    }
    out.emplace_back(c.language, phone_frequencies(c));
  }
  return out;
}

int cmd_aspf(Context& ctx) {
  std::vector<std::string> target_specs = ctx.get_all("target");
  if (target_specs.empty()) throw InputError("at least one --target required");
  NamedVectors targets = load_frequency_vectors(ctx, target_specs);
  NamedVectors candidates = load_frequency_vectors(ctx, sources(ctx));
  const std::string matrix = format_aspf_matrix(targets, candidates);
  ctx.write_output("aspf_matrix.tsv", matrix);
  ctx.out << matrix;
  return kExitOk;
}

int cmd_rank_sources(Context& ctx) {
  Corpus target = load_language(ctx, single_target(ctx));
  NamedVectors candidates = load_frequency_vectors(ctx, sources(ctx));
  std::vector<RankedSource> ranked =
      rank_sources(phone_frequencies(target), candidates);
  std::string table = "rank\tsource\taspf\tcosine\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    table += std::to_string(i + 1) + '\t' + ranked[i].name + '\t' +
             format_fixed(ranked[i].score.value, 6) + '\t' +
             format_fixed(ranked[i].score.cosine, 6) + '\n';
  }
  ctx.write_output("ranking_" + file_safe(target.language) + ".tsv", table);
  ctx.out << table;
  return kExitOk;
}

int cmd_map(Context& ctx) {
  std::vector<std::string> src = sources(ctx);
  if (src.size() != 1) throw InputError("map takes exactly one --source");
  FeatureTable table = load_feature_table(ctx);
  Corpus target = load_language(ctx, single_target(ctx));
  Corpus source = load_language(ctx, src.front());
  MappingOptions options;
  options.fallback = fallback_policy(ctx);
  PhoneMapping mapping =
      build_mapping(target, source, table,
                    parse_boundary_mode(ctx.require("boundary-mode")), options);
  for (const std::string& w : mapping.warnings) ctx.warn(w);
  const std::string text = serialize_mapping(mapping);
  ctx.write_output("mapping_" + file_safe(target.language) + "_" +
                       file_safe(source.language) + ".tsv",
                   text);
  ctx.out << text;
  return kExitOk;
}

int cmd_encode(Context& ctx) {
  const Scenario scenario = parse_scenario(ctx.require("scenario"));
  Corpus target = load_language(ctx, single_target(ctx));
  const std::string name = to_string(scenario);
  if (scenario == Scenario::kFeature) {
    if (ctx.get("mapping")) {
      throw InputError("--mapping does not apply to the feature scenario");
    }
    FeatureTable table = load_feature_table(ctx);
    const FallbackPolicy fallback = fallback_policy(ctx);
    ctx.write_output("encoded_feature.tsv",
                     serialize_features(encode_features(target, table, fallback)));
    // Per-phone vectors for every phone of every given language.
    PhoneCounts phones = phone_inventory(target);
    for (const std::string& spec : ctx.get_all("source")) {
      for (const auto& [p, n] : phone_inventory(load_language(ctx, spec))) {
        phones[p] += n;
      }
    }
    std::string out = "phone";
    for (std::string_view f : canonical_feature_names()) {
      out += '\t';
      out += f;
    }
    out += '\n';
    for (const auto& [p, n] : phones) {
      FeatureVector37 v = encode_phone(*lookup(table, p, fallback).features);
      out += p;
      for (double x : v) out += '\t' + format_shortest(x);
      out += '\n';
    }
    ctx.write_output("phone_features.tsv", out);
    ctx.out << "encoded " << target.utterances.size()
            << " utterances as 37-dimensional feature vectors\n";
    return kExitOk;
  }

  std::vector<std::string> src = sources(ctx);
  if (src.size() != 1) throw InputError("encode takes exactly one --source");
  Corpus source = load_language(ctx, src.front());
  LabelVocabulary vocab;
  Corpus encoded_corpus = target;
  if (scenario == Scenario::kMap) {
    auto path = ctx.get("mapping");
    if (!path) throw InputError("the map scenario requires --mapping");
    PhoneMapping mapping = parse_mapping(ctx.read_input(*path), *path);
    vocab = build_vocabulary(scenario, phone_inventory(source),
                             phone_inventory(target), &mapping);
    encoded_corpus = apply_mapping(target, mapping);
  } else {
    if (ctx.get("mapping")) {
      throw InputError("--mapping conflicts with the nomap scenario");
    }
    vocab = build_vocabulary(scenario, phone_inventory(source),
                             phone_inventory(target));
  }
  ctx.write_output("vocab_" + name + ".tsv", serialize_vocabulary(vocab));
  ctx.write_output("encoded_" + name + ".tsv",
                   serialize_labels(encode_labels(encoded_corpus, vocab)));
  ctx.out << "encoded " << target.utterances.size() << " utterances over "
          << vocab.symbols.size() << " labels (" << vocab.new_symbol_ids.size()
          << " new)\n";
  return kExitOk;
}

int cmd_dist(Context& ctx) {
  const std::string path = ctx.require("tree");
  LanguageTree tree = LanguageTree::parse(ctx.read_input(path), path);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& p : ctx.get_all("pair")) {
    std::size_t comma = p.find(',');
    if (comma == std::string::npos) {
      throw InputError("--pair expects A,B, got '" + p + "'");
    }
    pairs.emplace_back(p.substr(0, comma), p.substr(comma + 1));
  }
  if (pairs.empty()) {
    std::vector<std::string> langs;
    for (const std::string& n : tree.names()) {
      if (tree.kind(n) == NodeKind::kLanguage) langs.push_back(n);
    }
    for (std::size_t i = 0; i < langs.size(); ++i) {
      for (std::size_t j = i + 1; j < langs.size(); ++j) {
        pairs.emplace_back(langs[i], langs[j]);
      }
    }
  }
  std::string table = "a\tb\tlca\tdistance\n";
  for (const auto& [a, b] : pairs) {
    TreeDistance d = tree.distance(a, b);
    table += a + '\t' + b + '\t' + d.lca_name + '\t' +
             std::to_string(d.value) + '\n';
    ctx.out << d.value << "\n";
  }
  ctx.write_output("distances.tsv", table);
  return kExitOk;
}

int cmd_select_test(Context& ctx) {
  Corpus pool = load_language(ctx, ctx.require("pool"));
  Corpus reference = load_language(ctx, ctx.require("reference"));
  SelectionOptions options;
  options.size = ctx.get_uint("size", true);
  options.trials = ctx.get_uint("trials", true);
  options.seed = ctx.get_uint("seed", false);
  options.exhaustive = ctx.get_bool("exhaustive");
  options.record_trace = ctx.get_bool("trace");
  TestSetSelection selection = select_test_set(pool, reference, options);
  ctx.write_output("test_set.txt", serialize_selection(selection, options));
  if (options.record_trace) {
    ctx.write_output("selection_trace.tsv",
                     serialize_selection_trace(selection, pool));
  }
  ctx.out << "selected " << selection.ids.size() << " utterances, ASPF "
          << format_fixed(selection.score.value, 6) << " over "
          << selection.trials_run << " subsets\n";
  return kExitOk;
}

int cmd_cer(Context& ctx) {
  const std::string ref_path = ctx.require("ref");
  const std::string hyp_path = ctx.require("hyp");
  Transcripts refs = parse_transcripts(ctx.read_input(ref_path), ref_path);
  ManifestTranscriptProvider hyp(
      parse_transcripts(ctx.read_input(hyp_path), hyp_path));
  std::optional<ManifestTranscriptProvider> gt;
  if (auto gt_path = ctx.get("gt")) {
    gt.emplace(parse_transcripts(ctx.read_input(*gt_path), *gt_path));
  }
  CerReport report = build_cer_report(refs, hyp, gt ? &*gt : nullptr);
  const std::string text = serialize_cer_report(report);
  ctx.write_output("cer_report.tsv", text);
  ctx.out << text;
  return kExitOk;
}

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<const char*> keys;
  std::function<int(Context&)> run;
};

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> kCommands = {
      {"inventory",
       "phonemize a corpus and report its phone inventory",
       {"out", "target", "oov-policy"},
       cmd_inventory},
      {"aspf",
       "ASPF matrix between target and source languages",
       {"out", "target", "source", "oov-policy"},
       cmd_aspf},
      {"rank-sources",
       "rank source languages by ASPF to the target",
       {"out", "target", "source", "oov-policy"},
       cmd_rank_sources},
      {"map",
       "map target phones onto a source inventory",
       {"out", "target", "source", "feature-table", "feature-delimiter",
        "fallback", "oov-policy", "boundary-mode"},
       cmd_map},
      {"encode",
       "encode the target corpus for the nomap, map or feature scenario",
       {"out", "target", "source", "scenario", "mapping", "feature-table",
        "feature-delimiter", "fallback", "oov-policy"},
       cmd_encode},
      {"dist",
       "family-tree distance between nodes",
       {"out", "tree", "pair"},
       cmd_dist},
      {"select-test",
       "pick the test subset whose phone frequencies best match a reference",
       {"out", "seed", "pool", "reference", "size", "trials", "exhaustive",
        "trace", "oov-policy"},
       cmd_select_test},
      {"cer",
       "character error rates against reference texts",
       {"out", "hyp", "ref", "gt"},
       cmd_cer},
  };
  return kCommands;
}

// Flag values beat config values, which beat the environment and defaults.
std::map<std::string, std::vector<std::string>> resolve(
    const CommandSpec& command,
    const std::map<std::string, std::vector<std::string>>& flags,
    const ConfigFile* config) {
  std::map<std::string, std::vector<std::string>> resolved;
  for (const char* key : command.keys) {
    const OptionSpec& spec = spec_for(key);
    auto f = flags.find(key);
    if (f != flags.end() && !f->second.empty()) {
      resolved[key] = f->second;
      continue;
    }
    if (config != nullptr) {
      auto c = config->values().find(key);
      if (c != config->values().end()) {
        if (!spec.repeatable && c->second.size() > 1) {
          throw InputError("config key '" + std::string(key) +
                           "' given more than once");
        }
        resolved[key] = c->second;
        continue;
      }
    }
    if (std::string_view(key) == "feature-table") {
      if (const char* env = std::getenv(kFeatureTableEnv); env && *env) {
        resolved[key] = {env};
        continue;
      }
    }
    if (spec.fallback != nullptr) resolved[key] = {spec.fallback};
  }
  return resolved;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"phonxfer: phone mapping and ASPF tooling for "
               "cross-lingual TTS transfer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(PHONXFER_VERSION));
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value config file");

  std::map<std::string, std::vector<std::string>> flags;
  std::map<const CLI::App*, const CommandSpec*> by_app;
  for (const CommandSpec& command : command_specs()) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("--config", config_path, "flat key = value config file");
    by_app[sub] = &command;
    for (const char* key : command.keys) {
      const OptionSpec& spec = spec_for(key);
      std::string name = std::string("--") + key;
      std::string help = spec.help;
      if (spec.fallback != nullptr) help += " [" + std::string(spec.fallback) + "]";
      if (spec.flag) {
        sub->add_flag_callback(
            name, [&flags, k = std::string(key)] { flags[k] = {"true"}; },
            help);
      } else if (spec.repeatable) {
        sub->add_option(name, flags[key], help)->allow_extra_args(false);
      } else {
        sub->add_option_function<std::string>(
            name,
            [&flags, k = std::string(key)](const std::string& v) {
              flags[k] = {v};
            },
            help);
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const CommandSpec* command = nullptr;
  for (const auto& [sub, spec] : by_app) {
    if (sub->parsed()) command = spec;
  }
  try {
    std::optional<ConfigFile> config;
    if (!config_path.empty()) {
      if (!fs::exists(config_path)) {
        throw InputError("config file not found: " + config_path);
      }
      config = ConfigFile::parse(read_file(config_path), config_path);
      std::set<std::string> known;
      for (const OptionSpec& s : option_specs()) known.insert(s.key);
      for (const auto& [key, values] : config->values()) {
        if (known.count(key) == 0) {
          throw InputError(config_path + ": unknown key '" + key + "'");
        }
      }
    }
    Context ctx(command->name, resolve(*command, flags, config ? &*config : nullptr),
                out, err);
    const int code = command->run(ctx);
    ctx.finish();
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace phonxfer::cli
