#pragma once

#include <cmath>

namespace h2c::detail {

inline long double power_ld(int n, int e) {
  long double v = 1.0L;
  for (int i = 0; i < e; ++i) v *= n;
  return v;
}

// Rates arrive as decimals with ~15 significant digits; products within
// relative 1e-12 of an integer are treated as exactly that integer so the
// strictness of the bound does not depend on binary rounding of the rate.
inline long long ceil_scaled(double rate, long double magnitude) {
  long double v = static_cast<long double>(rate) * magnitude;
  return static_cast<long long>(ceill(v * (1.0L - 1e-12L)));
}

inline long long floor_scaled(double rate, long double magnitude) {
  long double v = static_cast<long double>(rate) * magnitude;
  return static_cast<long long>(floorl(v * (1.0L + 1e-12L)));
}

}  // namespace h2c::detail
