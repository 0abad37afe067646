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

#ifndef PHONXFER_CLI_H_
#define PHONXFER_CLI_H_

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phonxfer::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

// Environment variable naming the default feature table.
inline constexpr const char* kFeatureTableEnv = "PHONXFER_FEATURE_TABLE";

// Flat "key = value" file. '#' starts a comment line; a key may repeat to
// give a list. Keys are the long flag names without dashes.
class ConfigFile {
 public:
  static ConfigFile parse(std::string_view text,
                          std::string_view source = "config");

  const std::map<std::string, std::vector<std::string>>& values() const {
    return values_;
  }

 private:
  std::map<std::string, std::vector<std::string>> values_;
};

std::string sha256_hex(std::string_view data);

// Per-run provenance record written next to a command's outputs.
struct RunManifest {
  std::string tool_version;
  std::string command;
  // Fully resolved key -> values after flag/config/default merging.
  std::map<std::string, std::vector<std::string>> config;
  // Path as given -> SHA-256 of its contents, in first-read order.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> warnings;
  std::string started_at;   // UTC ISO-8601
  std::string finished_at;

  // JSON with the timestamps grouped under "timestamps".
  std::string to_json() const;
};

// Runs one command line (argv[0] is the program name). Output that a user
// reads goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace phonxfer::cli

#endif  // PHONXFER_CLI_H_
