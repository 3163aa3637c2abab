// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/tokenize.hpp"

#include <stdexcept>

#include "rankdiv/unicode.hpp"

namespace rankdiv {

using uni::Codepoint;

std::string_view to_string(TokenClass c) {
  switch (c) {
    case TokenClass::Word: return "word";
    case TokenClass::Emoji: return "emoji";
    case TokenClass::Hashtag: return "hashtag";
    case TokenClass::Mention: return "mention";
    case TokenClass::Url: return "url";
    case TokenClass::Other: return "other";
  }
  return "other";
}

std::optional<TokenClass> token_class_from_string(std::string_view s) {
  if (s == "word") return TokenClass::Word;
  if (s == "emoji") return TokenClass::Emoji;
  if (s == "hashtag") return TokenClass::Hashtag;
  if (s == "mention") return TokenClass::Mention;
  if (s == "url") return TokenClass::Url;
  if (s == "other") return TokenClass::Other;
  return std::nullopt;
}

namespace {

bool is_tag_char(Codepoint cp) {
  return uni::is_letter(cp) || uni::is_digit(cp) || cp == '_';
}

bool is_word_char(Codepoint cp) {
  return uni::is_letter(cp) || uni::is_digit(cp) || cp == '_' || cp == '\'';
}

bool starts_url(const std::vector<Codepoint>& cps, std::size_t i) {
  static constexpr std::string_view http = "http://";
  static constexpr std::string_view https = "https://";
  for (std::string_view scheme : {https, http}) {
    if (i + scheme.size() > cps.size()) continue;
    bool ok = true;
    for (std::size_t j = 0; j < scheme.size(); ++j) {
      Codepoint c = cps[i + j];
      if (c >= 'A' && c <= 'Z') c += 0x20;
      if (c != static_cast<Codepoint>(scheme[j])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  const auto cps = uni::decode_utf8(text);
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = cps.size();

  auto fold_range = [&](std::size_t b, std::size_t e) {
    std::vector<Codepoint> folded;
    folded.reserve(e - b);
    for (std::size_t j = b; j < e; ++j) uni::fold_append(folded, cps[j]);
    return uni::encode_utf8(folded);
  };

  while (i < n) {
    const Codepoint cp = cps[i];
    if (uni::is_whitespace(cp)) {
      ++i;
      continue;
    }
    if (starts_url(cps, i)) {
      std::string s;
      while (i < n && !uni::is_whitespace(cps[i])) uni::append_utf8(s, cps[i++]);
      out.push_back({std::move(s), TokenClass::Url});
      continue;
    }
    if ((cp == '#' || cp == '@') && i + 1 < n && is_tag_char(cps[i + 1])) {
      std::size_t j = i + 1;
      while (j < n && is_tag_char(cps[j])) ++j;
      std::string s(1, static_cast<char>(cp));
      s += fold_range(i + 1, j);
      out.push_back({std::move(s), cp == '#' ? TokenClass::Hashtag : TokenClass::Mention});
      i = j;
      continue;
    }
    if (uni::is_emoji(cp)) {
      if (uni::is_fitzpatrick(cp)) {
        std::string s;
        uni::append_utf8(s, cp);
        out.push_back({std::move(s), TokenClass::Emoji});
        ++i;
        continue;
      }
      // One emoji token: base (+ VS16), extended across ZWJ joins. Skin-tone
      // modifiers are split into their own tokens.
      std::string s;
      std::vector<Token> modifiers;
      uni::append_utf8(s, cp);
      std::size_t j = i + 1;
      for (;;) {
        if (j < n && cps[j] == uni::kVariationSelector16) {
          uni::append_utf8(s, cps[j]);
          ++j;
          continue;
        }
        if (j < n && uni::is_fitzpatrick(cps[j])) {
          std::string m;
          uni::append_utf8(m, cps[j]);
          modifiers.push_back({std::move(m), TokenClass::Emoji});
          ++j;
          continue;
        }
        if (j + 1 < n && cps[j] == uni::kZwj && uni::is_emoji(cps[j + 1]) &&
            !uni::is_fitzpatrick(cps[j + 1])) {
          uni::append_utf8(s, cps[j]);
          uni::append_utf8(s, cps[j + 1]);
          j += 2;
          continue;
        }
        break;
      }
      out.push_back({std::move(s), TokenClass::Emoji});
      for (auto& m : modifiers) out.push_back(std::move(m));
      i = j;
      continue;
    }
    if (is_word_char(cp)) {
      std::size_t j = i;
      while (j < n && is_word_char(cps[j])) ++j;
      out.push_back({fold_range(i, j), TokenClass::Word});
      i = j;
      continue;
    }
    // Run of everything else (punctuation, bare sigils, unclassified symbols)
    // as `other`.
    std::size_t j = i;
    std::string s;
    do {
      uni::append_utf8(s, cps[j]);
      ++j;
    } while (j < n && !uni::is_whitespace(cps[j]) && !is_word_char(cps[j]) &&
             !uni::is_emoji(cps[j]) && cps[j] != '#' && cps[j] != '@');
    out.push_back({std::move(s), TokenClass::Other});
    i = j;
  }
  return out;
}

std::string NGram::joined() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ' ';
    s += parts[i];
  }
  return s;
}

std::vector<NGram> ngrams(const std::vector<Token>& tokens, int n, std::uint8_t mask) {
  if (n < kMinNgram || n > kMaxNgram)
    throw std::invalid_argument("ngram order must be in [1, 5]");
  std::vector<std::string> filtered;
  filtered.reserve(tokens.size());
  for (const auto& t : tokens)
    if (mask & class_mask(t.cls)) filtered.push_back(t.surface);
  std::vector<NGram> out;
  if (filtered.size() < static_cast<std::size_t>(n)) return out;
  const std::size_t count = filtered.size() - n + 1;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    NGram g;
    g.parts.assign(filtered.begin() + i, filtered.begin() + i + n);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::string> surfaces_of_class(const std::vector<Token>& tokens, TokenClass c) {
  std::vector<std::string> out;
  for (const auto& t : tokens)
    if (t.cls == c) out.push_back(t.surface);
  return out;
}

}  // namespace rankdiv
