#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "vat/error.hpp"

namespace vat::detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Splits file content into lines.  Accepts a missing final newline but
// rejects CR so CRLF files fail loudly instead of corrupting segments.
inline std::vector<std::string_view> split_lines(std::string_view content,
                                                 const std::string& origin) {
  if (content.find('\r') != std::string_view::npos)
    fail(origin + ": carriage return found; expected LF line endings");
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t pos = content.find('\n', start);
    if (pos == std::string_view::npos) pos = content.size();
    lines.push_back(content.substr(start, pos - start));
    start = pos + 1;
  }
  return lines;
}

// Locale-independent strict numeric parsing: the whole token must be
// consumed and the value must be finite.
inline double parse_double(std::string_view tok, const std::string& origin) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    fail(origin + ": malformed number '" + std::string(tok) + "'");
  if (!std::isfinite(v))
    fail(origin + ": non-finite number '" + std::string(tok) + "'");
  return v;
}

inline std::size_t parse_index(std::string_view tok, const std::string& origin) {
  std::size_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    fail(origin + ": malformed id '" + std::string(tok) + "'");
  return v;
}

// Fixed-point formatting; snprintf with the default "C" locale keeps the
// output byte-stable across platforms.
inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return std::string(buf);
}

inline bool is_comment_line(std::string_view line) {
  return !line.empty() && line.front() == '#';
}

}  // namespace vat::detail
