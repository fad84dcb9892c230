#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace hlip {

// Shortest round-trip representation; locale independent.
inline std::string fmt_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace hlip
