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

#include "ginirate/incomplete_gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ginirate/errors.hpp"

namespace ginirate {
namespace {

constexpr int kMaxIterations = 10'000'000;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// lgamma(a + 1) - (a log a - a + log(2 pi a) / 2), asymptotic in 1/a.
long double stirling_tail(long double a) {
  const long double r = 1.0L / a;
  const long double r2 = r * r;
  return r * (1.0L / 12 -
              r2 * (1.0L / 360 -
                    r2 * (1.0L / 1260 - r2 * (1.0L / 1680 - r2 / 1188))));
}

}  // namespace

long double log1p_deficit(long double t) {
  if (std::fabs(t) < 0.1L) {
    // sum_{m >= 2} (-1)^m t^m / m
    long double power = t * t;
    long double sum = 0.0L;
    for (int m = 2; m < 64; ++m) {
      const long double term = power / m;
      sum += (m % 2 == 0) ? term : -term;
      if (std::fabs(term) < kEps * std::fabs(sum)) break;
      power *= t;
    }
    return sum;
  }
  return t - std::log1p(t);
}

long double log_gamma_prefactor(long double a, long double x) {
  if (x == 0.0L) return a == 0.0L ? 0.0L : -std::numeric_limits<long double>::infinity();
  if (a < 16.0L) {
    return a * std::log(x) - x - std::lgamma(a + 1.0L);
  }
  const long double t = (x - a) / a;
  return -a * log1p_deficit(t) -
         0.5L * std::log(2.0L * std::numbers::pi_v<long double> * a) -
         stirling_tail(a);
}

long double lower_gamma_series(long double a, long double x) {
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int j = 1; j < kMaxIterations; ++j) {
    term *= x / (a + j);
    sum += term;
    if (term < kEps * sum) return sum;
  }
  throw NonConvergence("incomplete gamma series did not converge for a = " +
                       std::to_string(static_cast<double>(a)) +
                       ", x = " + std::to_string(static_cast<double>(x)));
}

namespace {

// Modified Lentz evaluation of the continued fraction for
// Gamma(a, x) e^{x} x^{-a}; Q(a, x) = a * prefactor * cf.
long double upper_fraction(long double a, long double x) {
  constexpr long double tiny = 1e-4000L;
  long double b = x + 1.0L - a;
  long double c = 1.0L / tiny;
  long double d = 1.0L / b;
  long double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const long double an = -i * (i - a);
    b += 2.0L;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0L) < kEps) return h;
  }
  throw NonConvergence("incomplete gamma continued fraction did not converge"
                       " for a = " + std::to_string(static_cast<double>(a)) +
                       ", x = " + std::to_string(static_cast<double>(x)));
}

void check_args(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("incomplete gamma needs a > 0, got " + std::to_string(a));
  }
  if (!(x >= 0.0)) {
    throw DomainError("incomplete gamma needs x >= 0, got " + std::to_string(x));
  }
}

}  // namespace

double reg_lower_gamma(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const long double la = a;
  const long double lx = x;
  if (lx < la + 1.0L) {
    const long double lp = log_gamma_prefactor(la, lx) + std::log(lower_gamma_series(la, lx));
    return static_cast<double>(std::exp(lp));
  }
  const long double lq = log_gamma_prefactor(la, lx) + std::log(la * upper_fraction(la, lx));
  return static_cast<double>(-std::expm1(lq));
}

double reg_upper_gamma(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  const long double la = a;
  const long double lx = x;
  if (lx < la + 1.0L) {
    const long double lp = log_gamma_prefactor(la, lx) + std::log(lower_gamma_series(la, lx));
    return static_cast<double>(-std::expm1(lp));
  }
  const long double lq = log_gamma_prefactor(la, lx) + std::log(la * upper_fraction(la, lx));
  return static_cast<double>(std::exp(lq));
}

}  // namespace ginirate
