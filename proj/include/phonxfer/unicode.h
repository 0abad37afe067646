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

#ifndef PHONXFER_UNICODE_H_
#define PHONXFER_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace phonxfer::unicode {

// All functions take and return UTF-8. Functions that decode input throw
// InputError on ill-formed UTF-8.

bool is_valid_utf8(std::string_view s);

std::u32string to_codepoints(std::string_view s);
std::string from_codepoints(std::u32string_view cps);

std::string nfc(std::string_view s);
std::string nfd(std::string_view s);

// Per-codepoint simple lowercase mapping (no context, no length change).
std::string simple_lowercase(std::string_view s);

bool is_punctuation(char32_t cp);
bool is_whitespace(char32_t cp);

// Combining marks (Mn, Mc, Me) and modifier letters (Lm).
bool is_modifier(char32_t cp);

// "U+006F U+031E" style rendering for diagnostics.
std::string describe_codepoints(std::string_view s);

}  // namespace phonxfer::unicode

#endif  // PHONXFER_UNICODE_H_
