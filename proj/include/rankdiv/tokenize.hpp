// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankdiv {

enum class TokenClass : std::uint8_t { Word, Emoji, Hashtag, Mention, Url, Other };

std::string_view to_string(TokenClass c);
std::optional<TokenClass> token_class_from_string(std::string_view s);

struct Token {
  std::string surface;
  TokenClass cls;

  bool operator==(const Token&) const = default;
};

// Splits NFC-normalized text into classified tokens. Word surfaces are
// case-folded; hashtags/mentions keep their sigil and are folded after it;
// emoji ZWJ sequences stay together but Fitzpatrick skin-tone modifiers are
// emitted as separate emoji tokens.
std::vector<Token> tokenize(std::string_view text);

struct NGram {
  std::vector<std::string> parts;

  std::string joined() const;  // parts joined with a single space
  bool operator==(const NGram&) const = default;
};

inline constexpr int kMinNgram = 1;
inline constexpr int kMaxNgram = 5;

// All contiguous windows of length n over the tokens whose class is in
// `classes` (bitmask by TokenClass value). Throws std::invalid_argument for
// n outside [1, 5].
std::vector<NGram> ngrams(const std::vector<Token>& tokens, int n,
                          std::uint8_t class_mask = 1u << static_cast<int>(TokenClass::Word));

constexpr std::uint8_t class_mask(TokenClass c) {
  return static_cast<std::uint8_t>(1u << static_cast<int>(c));
}

// Surfaces of tokens of one class, in order. Convenience for the special-token
// analyses (N = 1).
std::vector<std::string> surfaces_of_class(const std::vector<Token>& tokens, TokenClass c);

}  // namespace rankdiv
