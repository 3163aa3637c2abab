// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/unicode.hpp"

#include <algorithm>
#include <utility>

namespace rankdiv::uni {

std::vector<Codepoint> decode_utf8(std::string_view bytes) {
  std::vector<Codepoint> out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto n = bytes.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    Codepoint cp;
    std::size_t len;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(kReplacement);
      break;
    }
    bool ok = true;
    for (std::size_t j = 1; j < len; ++j) {
      const auto b = static_cast<unsigned char>(bytes[i + j]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, Codepoint cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(const std::vector<Codepoint>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (Codepoint cp : cps) append_utf8(out, cp);
  return out;
}

bool is_whitespace(Codepoint cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_digit(Codepoint cp) { return cp >= '0' && cp <= '9'; }

bool is_devanagari(Codepoint cp) noexcept {
  return (cp >= 0x0900 && cp <= 0x097F) || (cp >= 0xA8E0 && cp <= 0xA8FF);
}

bool is_combining_mark(Codepoint cp) {
  return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF) ||
         (cp >= 0x20D0 && cp <= 0x20FF);
}

bool is_letter(Codepoint cp) {
  if (cp < 0x80)
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (is_devanagari(cp)) return false;
  // Latin-1 letters minus the multiplication/division signs.
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x100 && cp <= 0x2AF) return true;   // Latin Extended-A/B, IPA
  if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x374 && cp != 0x375 &&
                                         cp != 0x37E && cp != 0x384 &&
                                         cp != 0x385 && cp != 0x387;
  if (cp >= 0x400 && cp <= 0x4FF) return true;   // Cyrillic
  if (cp >= 0x531 && cp <= 0x58F) return cp <= 0x556 || cp >= 0x561;  // Armenian
  if (cp >= 0x5D0 && cp <= 0x5EA) return true;   // Hebrew
  if (cp >= 0x620 && cp <= 0x64A) return true;   // Arabic
  if (cp >= 0x1E00 && cp <= 0x1FFF) return true; // Latin Ext. Additional, Greek Ext.
  if (cp >= 0x3040 && cp <= 0x30FF) return true; // Hiragana/Katakana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true; // CJK unified
  if (cp >= 0xAC00 && cp <= 0xD7A3) return true; // Hangul
  if (is_combining_mark(cp)) return true;        // marks stay inside words
  return false;
}

bool is_fitzpatrick(Codepoint cp) noexcept {
  return cp >= kFitzpatrickFirst && cp <= kFitzpatrickLast;
}

bool is_emoji(Codepoint cp) {
  if (is_fitzpatrick(cp)) return true;
  if (cp >= 0x1F300 && cp <= 0x1F5FF) return true;  // pictographs
  if (cp >= 0x1F600 && cp <= 0x1F64F) return true;  // emoticons
  if (cp >= 0x1F680 && cp <= 0x1F6FF) return true;  // transport & map
  if (cp >= 0x1F900 && cp <= 0x1F9FF) return true;  // supplemental symbols
  if (cp >= 0x1FA70 && cp <= 0x1FAFF) return true;  // extended-A
  if (cp >= 0x1F1E6 && cp <= 0x1F1FF) return true;  // regional indicators
  if (cp >= 0x2600 && cp <= 0x27BF) return true;    // misc symbols, dingbats
  if (cp >= 0x2B00 && cp <= 0x2BFF) return true;    // arrows & symbols
  switch (cp) {
    case 0x203C:
    case 0x2049:
    case 0x2122:
    case 0x2139:
    case 0x3030:
    case 0x303D:
    case 0x3297:
    case 0x3299:
      return true;
    default:
      return (cp >= 0x2190 && cp <= 0x21FF) || (cp >= 0x2934 && cp <= 0x2935);
  }
}

namespace {

// Simple one-to-one folds for the repertoire above; kSpecial handles the
// string-valued cases.
Codepoint fold_one(Codepoint cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x137) return cp | 1;          // paired even/odd
  if (cp >= 0x139 && cp <= 0x148) return ((cp - 1) | 1) + 1;
  if (cp >= 0x14A && cp <= 0x177) return cp | 1;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return ((cp - 1) | 1) + 1;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0x531 && cp <= 0x556) return cp + 0x30;
  if (cp >= 0x1E00 && cp <= 0x1E95) return cp | 1;
  if (cp >= 0x1EA0 && cp <= 0x1EFF) return cp | 1;
  return cp;
}

}  // namespace

void fold_append(std::vector<Codepoint>& out, Codepoint cp) {
  switch (cp) {
    case 0xDF:   // ß
    case 0x1E9E: // ẞ
      out.push_back('s');
      out.push_back('s');
      return;
    case 0x130:  // İ -> i + combining dot above
      out.push_back('i');
      out.push_back(0x307);
      return;
    case 0x3C2:  // final sigma folds to sigma
      out.push_back(0x3C3);
      return;
    default:
      out.push_back(fold_one(cp));
  }
}

std::string casefold(std::string_view utf8) {
  const auto cps = decode_utf8(utf8);
  std::vector<Codepoint> folded;
  folded.reserve(cps.size());
  for (Codepoint cp : cps) fold_append(folded, cp);
  return encode_utf8(folded);
}

namespace {

// Canonical composition pairs (base, combining) -> composed, covering the
// Latin-1 and Latin Extended-A letters produced by Western European input.
struct ComposePair {
  Codepoint base;
  Codepoint mark;
  Codepoint composed;
};

constexpr ComposePair kCompose[] = {
    {'A', 0x300, 0xC0}, {'A', 0x301, 0xC1}, {'A', 0x302, 0xC2},
    {'A', 0x303, 0xC3}, {'A', 0x308, 0xC4}, {'A', 0x30A, 0xC5},
    {'C', 0x327, 0xC7}, {'E', 0x300, 0xC8}, {'E', 0x301, 0xC9},
    {'E', 0x302, 0xCA}, {'E', 0x308, 0xCB}, {'I', 0x300, 0xCC},
    {'I', 0x301, 0xCD}, {'I', 0x302, 0xCE}, {'I', 0x308, 0xCF},
    {'N', 0x303, 0xD1}, {'O', 0x300, 0xD2}, {'O', 0x301, 0xD3},
    {'O', 0x302, 0xD4}, {'O', 0x303, 0xD5}, {'O', 0x308, 0xD6},
    {'U', 0x300, 0xD9}, {'U', 0x301, 0xDA}, {'U', 0x302, 0xDB},
    {'U', 0x308, 0xDC}, {'Y', 0x301, 0xDD},
    {'a', 0x300, 0xE0}, {'a', 0x301, 0xE1}, {'a', 0x302, 0xE2},
    {'a', 0x303, 0xE3}, {'a', 0x308, 0xE4}, {'a', 0x30A, 0xE5},
    {'c', 0x327, 0xE7}, {'e', 0x300, 0xE8}, {'e', 0x301, 0xE9},
    {'e', 0x302, 0xEA}, {'e', 0x308, 0xEB}, {'i', 0x300, 0xEC},
    {'i', 0x301, 0xED}, {'i', 0x302, 0xEE}, {'i', 0x308, 0xEF},
    {'n', 0x303, 0xF1}, {'o', 0x300, 0xF2}, {'o', 0x301, 0xF3},
    {'o', 0x302, 0xF4}, {'o', 0x303, 0xF5}, {'o', 0x308, 0xF6},
    {'u', 0x300, 0xF9}, {'u', 0x301, 0xFA}, {'u', 0x302, 0xFB},
    {'u', 0x308, 0xFC}, {'y', 0x301, 0xFD}, {'y', 0x308, 0xFF},
};

Codepoint compose(Codepoint base, Codepoint mark) {
  for (const auto& p : kCompose)
    if (p.base == base && p.mark == mark) return p.composed;
  return 0;
}

}  // namespace

std::string normalize_nfc(std::string_view utf8) {
  const auto cps = decode_utf8(utf8);
  std::vector<Codepoint> out;
  out.reserve(cps.size());
  for (Codepoint cp : cps) {
    if (!out.empty() && is_combining_mark(cp)) {
      if (const Codepoint c = compose(out.back(), cp)) {
        out.back() = c;
        continue;
      }
    }
    out.push_back(cp);
  }
  return encode_utf8(out);
}

}  // namespace rankdiv::uni
