// Copyright 2026 The ginirate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GINIRATE_TESTS_ORACLES_HPP
#define GINIRATE_TESTS_ORACLES_HPP

// Brute-force references used only by tests. None of these share code with
// the library paths they check.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <cstdint>
#include <functional>

namespace ginirate::oracle {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

/// P(k, s) for integer k: 1 - e^{-s} sum_{j<k} s^j / j!, at 50 digits.
inline Decimal50 lower_gamma_integer(std::int64_t k, const Decimal50& s) {
  Decimal50 term = 1;
  Decimal50 partial = 0;
  for (std::int64_t j = 0; j < k; ++j) {
    partial += term;
    term *= s / (j + 1);
  }
  return 1 - boost::multiprecision::exp(-s) * partial;
}

/// Untruncated log prod_{k=1}^{n} P(k, n r^2), at 50 digits.
inline double ginibre_log_cdf_product(std::int64_t n, double r) {
  const Decimal50 s = Decimal50(n) * Decimal50(r) * Decimal50(r);
  Decimal50 acc = 0;
  for (std::int64_t k = 1; k <= n; ++k) acc += boost::multiprecision::log(lower_gamma_integer(k, s));
  return acc.convert_to<double>();
}

/// max over a uniform grid of |f - g|, returning the location too.
struct GridMax {
  double value = 0.0;
  double location = 0.0;
};

inline GridMax grid_max_abs(const std::function<double(double)>& d, double lo, double hi,
                            std::int64_t points) {
  GridMax best;
  for (std::int64_t i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    const double v = std::fabs(d(x));
    if (v > best.value) best = {v, x};
  }
  return best;
}

/// Composite trapezoid of |d| over [lo, hi].
inline double trapezoid_abs(const std::function<double(double)>& d, double lo, double hi,
                            std::int64_t points) {
  const double h = (hi - lo) / static_cast<double>(points - 1);
  double sum = 0.5 * (std::fabs(d(lo)) + std::fabs(d(hi)));
  for (std::int64_t i = 1; i + 1 < points; ++i) sum += std::fabs(d(lo + h * static_cast<double>(i)));
  return sum * h;
}

}  // namespace ginirate::oracle

#endif  // GINIRATE_TESTS_ORACLES_HPP
