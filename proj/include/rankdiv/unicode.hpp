// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rankdiv::uni {

using Codepoint = std::uint32_t;

constexpr Codepoint kReplacement = 0xFFFD;
constexpr Codepoint kZwj = 0x200D;
constexpr Codepoint kVariationSelector16 = 0xFE0F;
constexpr Codepoint kFitzpatrickFirst = 0x1F3FB;
constexpr Codepoint kFitzpatrickLast = 0x1F3FF;

std::vector<Codepoint> decode_utf8(std::string_view bytes);
void append_utf8(std::string& out, Codepoint cp);
std::string encode_utf8(const std::vector<Codepoint>& cps);

bool is_whitespace(Codepoint cp);
bool is_digit(Codepoint cp);
// Letters usable inside word/hashtag/mention surfaces. Devanagari is
// deliberately excluded (classed `other` downstream).
bool is_letter(Codepoint cp);
bool is_combining_mark(Codepoint cp);
bool is_emoji(Codepoint cp);
bool is_fitzpatrick(Codepoint cp) noexcept;
bool is_devanagari(Codepoint cp) noexcept;

// Case folding; expands (ß -> ss), hence string-valued.
void fold_append(std::vector<Codepoint>& out, Codepoint cp);
std::string casefold(std::string_view utf8);

// Canonical composition of base letter + combining mark pairs (NFC for the
// Latin repertoire this engine targets). Idempotent.
std::string normalize_nfc(std::string_view utf8);

}  // namespace rankdiv::uni
