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

#include "phonxfer/cli.h"
#include "phonxfer/error.h"
#include "phonxfer/text_io.h"

namespace phonxfer::cli {

ConfigFile ConfigFile::parse(std::string_view text, std::string_view source) {
  const std::string src(source);
  ConfigFile config;
  for (const Line& line : split_lines(text)) {
    std::string_view body = trim(line.text);
    if (body.empty() || body.front() == '#') continue;
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(src, line.number, "expected 'key = value'");
    }
    std::string key(trim(body.substr(0, eq)));
    std::string value(trim(body.substr(eq + 1)));
    if (key.empty()) throw ParseError(src, line.number, "empty key");
    config.values_[key].push_back(std::move(value));
  }
  return config;
}

}  // namespace phonxfer::cli
