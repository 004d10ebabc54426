#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "vat/error.hpp"

namespace vat::detail {

// Strict UTF-8 decoding: rejects overlong forms, surrogates, truncated
// sequences and values above U+10FFFF.  Text inputs are validated once at
// load time so everything downstream can assume well-formed data.

inline bool utf8_cont(unsigned char c) { return (c & 0xC0) == 0x80; }

// Decodes one code point starting at `i`; advances `i` past it.
inline char32_t decode_utf8_at(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  std::size_t len;
  char32_t cp;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
    min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
    min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
    min = 0x10000;
  } else {
    fail("invalid UTF-8 lead byte");
  }
  if (i + len > s.size()) fail("truncated UTF-8 sequence");
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if (!utf8_cont(b)) fail("invalid UTF-8 continuation byte");
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min) fail("overlong UTF-8 sequence");
  if (cp >= 0xD800 && cp <= 0xDFFF) fail("UTF-8 encoded surrogate");
  if (cp > 0x10FFFF) fail("code point out of range");
  i += len;
  return cp;
}

inline std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) out.push_back(decode_utf8_at(s, i));
  return out;
}

inline void encode_utf8(char32_t cp, std::string& out) {
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

inline std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) encode_utf8(cp, out);
  return out;
}

// Cheap validity check used by loaders to produce per-line diagnostics.
inline bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  try {
    while (i < s.size()) decode_utf8_at(s, i);
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace vat::detail
