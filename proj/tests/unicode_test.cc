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

#include <gtest/gtest.h>

#include <filesystem>

#include "phonxfer/normalize.h"
#include "phonxfer/text_io.h"
#include "phonxfer/unicode.h"

namespace phonxfer {
namespace {

TEST(UnicodeTest, Utf8Validation) {
  EXPECT_TRUE(unicode::is_valid_utf8("ɵ kot"));
  EXPECT_FALSE(unicode::is_valid_utf8("\xff"));
  EXPECT_FALSE(unicode::is_valid_utf8("\xc3"));
}

TEST(UnicodeTest, CodepointRoundTrip) {
  const std::string s = "ʃaxɒ";
  std::u32string cps = unicode::to_codepoints(s);
  ASSERT_EQ(cps.size(), 4u);
  EXPECT_EQ(cps[0], U'ʃ');
  EXPECT_EQ(unicode::from_codepoints(cps), s);
}

TEST(UnicodeTest, NormalForms) {
  const std::string composed = "\u00e9";
  const std::string decomposed = "e\u0301";
  EXPECT_EQ(unicode::nfc(decomposed), composed);
  EXPECT_EQ(unicode::nfd(composed), decomposed);
  EXPECT_TRUE(unicode::is_modifier(U'\u0301'));
  EXPECT_TRUE(unicode::is_modifier(U'ʰ'));  // ʰ
  EXPECT_FALSE(unicode::is_modifier(U'o'));
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(normalize_text("Hello, World!"), "hello world");
  EXPECT_EQ(normalize_text("  A  B "), "a b");
  EXPECT_EQ(normalize_text("?!.,;"), "");
  EXPECT_EQ(normalize_text("КОТ\tкот"), "кот кот");
}

TEST(NormalizeTest, Idempotent) {
  for (const char* s : {"Ça va? Oui.", "ÉTÉ", "x  ,  y", ""}) {
    const std::string once = normalize_text(s);
    EXPECT_EQ(normalize_text(once), once) << s;
  }
}

TEST(TextIoTest, SplitRecordHandlesQuotes) {
  auto f = split_record("o,\"+,-\",0", ',');
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[1], "+,-");
  EXPECT_EQ(quote_field("+,-", ','), "\"+,-\"");
  EXPECT_EQ(quote_field("+", ','), "+");
}

TEST(TextIoTest, SplitLinesNumbersFromOne) {
  auto lines = split_lines("a\r\nb\n\nc");
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0].number, 1u);
  EXPECT_EQ(lines[0].text, "a");
  EXPECT_EQ(lines[3].text, "c");
}

TEST(TextIoTest, Formatting) {
  EXPECT_EQ(format_fixed(1.0 / 3.0, 6), "0.333333");
  EXPECT_EQ(format_fixed(-0.0000001, 6), "0.000000");
  EXPECT_EQ(format_shortest(0.5), "0.5");
  EXPECT_EQ(format_shortest(-1.0), "-1");
}

TEST(TextIoTest, AtomicWriteAndRead) {
  auto dir = std::filesystem::temp_directory_path() / "phonxfer_textio_test";
  std::filesystem::create_directories(dir);
  write_file_atomic(dir / "x.txt", "hello\n");
  EXPECT_EQ(read_file(dir / "x.txt"), "hello\n");
  EXPECT_THROW(read_file(dir / "missing.txt"), std::exception);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace phonxfer
