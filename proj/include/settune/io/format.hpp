#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "settune/ratio.hpp"

namespace settune::io {

inline double round_to(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(value * scale) / scale;
}

/// Cents are shown to 4 decimals.
inline double display_cents(const Interval& t) { return round_to(cents(t), 4); }

/// Consonance components are shown to 3 decimals. Values too small to
/// survive that rounding keep 3 significant digits instead, so harmonicities
/// of inharmonic sets do not collapse to zero.
inline double display_consonance(const Ratio& r) {
  const double v = r.to_double();
  if (v == 0.0 || std::abs(v) >= 0.0005) return round_to(v, 3);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return std::strtod(buf, nullptr);
}

inline std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

/// Text form of display_consonance: "0.444" or "3.22e-06".
inline std::string consonance_text(const Ratio& r) {
  const double v = display_consonance(r);
  if (v == 0.0 || std::abs(v) >= 0.0005) return fixed(v, 3);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

}  // namespace settune::io
