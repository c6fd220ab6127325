// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <string>

namespace sdtn {

// Shortest representation that round-trips to the same double; locale
// independent, '.' decimal separator.
inline std::string format_double(double v) {
  if (v == 0.0) return "0";  // collapse the negative-zero spelling
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc()) throw std::invalid_argument("parse_double: bad number");
  return v;
}

}  // namespace sdtn
