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

#ifndef PHONXFER_NORMALIZE_H_
#define PHONXFER_NORMALIZE_H_

#include <string>
#include <string_view>

namespace phonxfer {

// Transcript normalization shared by dictionary lookup and CER scoring:
// NFC, drop punctuation (Unicode P* categories), simple lowercase, collapse
// whitespace runs to one space, trim.
std::string normalize_text(std::string_view s);

}  // namespace phonxfer

#endif  // PHONXFER_NORMALIZE_H_
