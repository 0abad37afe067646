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

#ifndef PHONXFER_ERROR_H_
#define PHONXFER_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phonxfer {

// Raised for malformed or inconsistent user input (bad files, unknown
// symbols, violated preconditions). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An InputError tied to a line of a text source.
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace phonxfer

#endif  // PHONXFER_ERROR_H_
