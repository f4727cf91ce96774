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

#include "ginirate/ginibre_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ginirate/errors.hpp"
#include "ginirate/incomplete_gamma.hpp"
#include "ginirate/parallel.hpp"

namespace ginirate {

GinibreLaw::GinibreLaw(ScalingParams p, double term_tol, double eval_tol)
    : p_(p), term_tol_(term_tol), eval_tol_(eval_tol) {
  if (!(term_tol > 0.0 && term_tol <= eval_tol && eval_tol < 1.0)) {
    throw DomainError("GinibreLaw needs 0 < term_tol <= eval_tol < 1");
  }
}

double GinibreLaw::log_cdf_radius(double r) const {
  return ginibre_log_cdf_radius(p_.n(), r, term_tol_);
}

double GinibreLaw::log_cdf_y(double y) const {
  const double r = p_.from_y(y);
  if (!(r > 0.0)) return -std::numeric_limits<double>::infinity();
  return log_cdf_radius(r);
}

double GinibreLaw::cdf_y(double y) const {
  const double r = p_.from_y(y);
  if (!(r > 0.0)) return 0.0;
  return std::exp(log_cdf_radius(r));
}

double ginibre_log_cdf_radius(std::int64_t n, double r, double term_tol) {
  if (n < 1) throw DomainError("Ginibre CDF needs n >= 1");
  if (!(r > 0.0)) {
    throw DomainError("Ginibre CDF needs a positive radius, got " + std::to_string(r));
  }
  if (!(term_tol > 0.0 && term_tol < 1.0)) {
    throw DomainError("term_tol must lie in (0, 1)");
  }
  if (std::isinf(r)) return 0.0;

  const long double s = static_cast<long double>(n) * r * r;
  const long double cut = s - 2.0L * std::sqrt(s * -std::log(static_cast<long double>(term_tol)));
  const std::int64_t k_lo = cut < 1.0L ? 1 : static_cast<std::int64_t>(std::floor(cut));
  if (k_lo > n) return 0.0;
  const std::int64_t k_split =
      s >= static_cast<long double>(n) ? n : static_cast<std::int64_t>(std::floor(s));

  long double acc = 0.0L;

  // k in [k_lo, k_split]: factor 1 - Q(k, s), Q built upward from pi_{k_lo - 1}.
  if (k_lo <= k_split) {
    long double pi = std::exp(log_gamma_prefactor(static_cast<long double>(k_lo - 1), s));
    long double q = 0.0L;
    for (std::int64_t k = k_lo; k <= k_split; ++k) {
      q += pi;
      acc += std::log1p(-static_cast<double>(q));
      pi *= s / static_cast<long double>(k);
    }
  }

  // k in [k_split + 1, n]: factor P(k, s) = pi_k R_k, walked downward from n.
  const std::int64_t k_p = std::max(k_split + 1, k_lo);
  if (k_p <= n) {
    const auto ln = static_cast<long double>(n);
    long double r_k = lower_gamma_series(ln, s);
    long double log_pi = log_gamma_prefactor(ln, s);
    for (std::int64_t k = n; k >= k_p; --k) {
      acc += log_pi + std::log(static_cast<double>(r_k));
      const auto lk = static_cast<long double>(k);
      r_k = 1.0L + (s / lk) * r_k;
      log_pi += std::log1p(static_cast<double>((lk - s) / s));
    }
  }
  return static_cast<double>(acc);
}

double ginibre_log_cdf_radius_reference(std::int64_t n, double r) {
  if (n < 1) throw DomainError("Ginibre CDF needs n >= 1");
  if (!(r > 0.0)) throw DomainError("Ginibre CDF needs a positive radius");
  if (std::isinf(r)) return 0.0;
  const double s = static_cast<double>(n) * r * r;
  double acc = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto a = static_cast<double>(k);
    // Whichever tail is smaller is the accurately computed one.
    acc += (s > a) ? std::log1p(-reg_upper_gamma(a, s)) : std::log(reg_lower_gamma(a, s));
  }
  return acc;
}

double log_cdf_asymptotic(const ScalingParams& p, double x) {
  const double g = p.gamma_n();
  const double stretch = 1.0 + x / g;
  if (!(stretch > 0.0)) {
    throw DomainError("asymptotic log-CDF needs 1 + x/gamma_n > 0, got x = " +
                      std::to_string(x));
  }
  return -(p.log_n() / (g * stretch * stretch)) * std::exp(-x) * std::exp(-x * x / (2.0 * g));
}

std::vector<double> cdf_y_grid(const GinibreLaw& law, std::span<const double> ys,
                               int workers) {
  std::vector<double> out(ys.size());
  parallel_for(static_cast<std::int64_t>(ys.size()), workers,
               [&](std::int64_t i) { out[i] = law.cdf_y(ys[i]); });
  return out;
}

std::vector<double> cdf_y_grid_serial(const GinibreLaw& law, std::span<const double> ys) {
  std::vector<double> out;
  out.reserve(ys.size());
  for (double y : ys) out.push_back(law.cdf_y(y));
  return out;
}

}  // namespace ginirate
