#pragma once

#include <cstdio>
#include <string>

namespace qsl {

// Canonical numeric rendering for reports and CSV: 12 significant digits,
// '.' decimal separator, no locale involvement. Shared everywhere so golden
// files compare bitwise across platforms.
inline std::string format_sig12(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace qsl
