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

#ifndef PHONXFER_TEXT_IO_H_
#define PHONXFER_TEXT_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace phonxfer {

// One physical line of a text source; `number` is 1-based.
struct Line {
  std::size_t number;
  std::string_view text;
};

// Splits on '\n', dropping a trailing '\r' from each line. A final newline
// does not produce an empty trailing line.
std::vector<Line> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view s, char delimiter);
// Splits one record of delimited text. Fields may be wrapped in double
// quotes (with "" as an escaped quote) so that they can contain the
// delimiter. Throws InputError on an unterminated quote.
std::vector<std::string> split_record(std::string_view line, char delimiter);

// Quotes `field` only when it contains the delimiter or a double quote.
std::string quote_field(std::string_view field, char delimiter);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string_view trim(std::string_view s);
bool is_blank(std::string_view s);

// Throws InputError naming the path when it cannot be read.
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Fixed-point rendering with exactly `decimals` digits; "-0.000" is printed
// as "0.000".
std::string format_fixed(double value, int decimals);

// Shortest representation that round-trips.
std::string format_shortest(double value);

}  // namespace phonxfer

#endif  // PHONXFER_TEXT_IO_H_
