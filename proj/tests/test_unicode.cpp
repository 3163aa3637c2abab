// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "rankdiv/unicode.hpp"

using namespace rankdiv;

TEST_CASE("utf8 round trip") {
  const std::string s = "héllo wörld 😂 #méxico";
  CHECK(uni::encode_utf8(uni::decode_utf8(s)) == s);
}

TEST_CASE("invalid bytes become replacement characters") {
  const std::string bad = "a\xFF\x80z";
  const auto cps = uni::decode_utf8(bad);
  REQUIRE(cps.size() == 4);
  CHECK(cps[0] == 'a');
  CHECK(cps[1] == uni::kReplacement);
  CHECK(cps[2] == uni::kReplacement);
  CHECK(cps[3] == 'z');
}

TEST_CASE("case folding") {
  CHECK(uni::casefold("CDMX") == "cdmx");
  CHECK(uni::casefold("México") == "méxico");
  CHECK(uni::casefold("STRASSE") == "strasse");
  CHECK(uni::casefold("straße") == "strasse");
  CHECK(uni::casefold("ΣΟΦΙΑ") == "σοφια");
  CHECK(uni::casefold("МОСКВА") == "москва");
  // accents are preserved, not stripped
  CHECK(uni::casefold("méxico") == "méxico");
}

TEST_CASE("casefold is idempotent") {
  for (const char* s : {"CDMX", "México", "straße", "Łódź", "ÀÉÎÕÜ"}) {
    const auto once = uni::casefold(s);
    CHECK(uni::casefold(once) == once);
  }
}

TEST_CASE("nfc composes combining sequences") {
  // e + COMBINING ACUTE -> é
  std::string in = "me";
  uni::append_utf8(in, 0x301);
  in += "xico";
  CHECK(uni::normalize_nfc(in) == "méxico");
  CHECK(uni::normalize_nfc("méxico") == "méxico");
  // idempotent
  CHECK(uni::normalize_nfc(uni::normalize_nfc(in)) == "méxico");
}

TEST_CASE("classification") {
  CHECK(uni::is_emoji(0x1F602));         // 😂
  CHECK(uni::is_fitzpatrick(0x1F3FD));
  CHECK(uni::is_emoji(0x1F3FD));
  CHECK(!uni::is_emoji('a'));
  CHECK(uni::is_letter(0xE9));           // é
  CHECK(!uni::is_letter(0x915));         // Devanagari KA is not a word letter here
  CHECK(uni::is_devanagari(0x915));
  CHECK(uni::is_whitespace(0x00A0));
}
