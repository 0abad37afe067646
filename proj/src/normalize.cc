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

#include "phonxfer/normalize.h"

#include "phonxfer/unicode.h"

namespace phonxfer {

std::string normalize_text(std::string_view s) {
  std::u32string in = unicode::to_codepoints(unicode::nfc(s));
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char32_t c : in) {
    if (unicode::is_punctuation(c)) continue;
    if (unicode::is_whitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  // Dropping punctuation or lowercasing can leave a composable sequence.
  return unicode::nfc(unicode::simple_lowercase(unicode::from_codepoints(out)));
}

}  // namespace phonxfer
