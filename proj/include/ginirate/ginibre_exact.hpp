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

#ifndef GINIRATE_GINIBRE_EXACT_HPP
#define GINIRATE_GINIBRE_EXACT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ginirate/scaling.hpp"

namespace ginirate {

/// Exact spectral-radius law of the n x n complex Ginibre ensemble.
///
/// The squared moduli of the eigenvalues are distributed as independent
/// Gamma(k, 1) / n variables, k = 1..n (Kostlan), so
///   P(|sigma_1| <= r) = prod_{k=1}^{n} P(k, n r^2).
/// This product is an external, exact benchmark: none of the code paths
/// below relies on the edge asymptotics they are later compared with.
class GinibreLaw {
 public:
  static constexpr double kDefaultTermTol = 1e-16;
  static constexpr double kDefaultEvalTol = 1e-12;

  explicit GinibreLaw(ScalingParams p, double term_tol = kDefaultTermTol,
                      double eval_tol = kDefaultEvalTol);

  const ScalingParams& params() const { return p_; }
  double term_tol() const { return term_tol_; }
  double eval_tol() const { return eval_tol_; }

  /// log P(|sigma_1| <= r); r > 0.
  double log_cdf_radius(double r) const;
  /// F_n^Gin(y) = P(Y_n <= y); zero where from_y(y) <= 0.
  double cdf_y(double y) const;
  /// log F_n^Gin(y); -inf where from_y(y) <= 0.
  double log_cdf_y(double y) const;

 private:
  ScalingParams p_;
  double term_tol_;
  double eval_tol_;
};

/// Truncated product kernel behind GinibreLaw, usable for any n >= 1.
///
/// Factors with k below k_min = floor(s - 2 sqrt(s log(1/term_tol))),
/// s = n r^2, are dropped: the Poisson lower-tail bound gives
/// 1 - P(k, s) <= term_tol^2 for each of them. The remaining factors are
/// produced by two positive-term recurrences on the Poisson masses
/// pi_j = e^{-s} s^j / j!:
///   Q(k+1, s) = Q(k, s) + pi_k          for k <= s (upward),
///   P(k, s)   = pi_k * R_k,  R_k = 1 + s/(k+1) R_{k+1}   for k > s (downward),
/// so no factor is ever formed by subtracting nearly equal numbers.
double ginibre_log_cdf_radius(std::int64_t n, double r,
                              double term_tol = GinibreLaw::kDefaultTermTol);

/// Untruncated reference: sum_k log reg_lower_gamma(k, n r^2), one
/// independent incomplete-gamma evaluation per factor. O(n sqrt(n)).
double ginibre_log_cdf_radius_reference(std::int64_t n, double r);

/// The closed-form edge asymptotic
///   log F_n^Gin(x) ~ -(log n / (gamma_n (1 + x/gamma_n)^2)) e^{-x} e^{-x^2/(2 gamma_n)}
/// with the (1 + O(1/gamma_n)) correction set to 1. Throws DomainError when
/// 1 + x/gamma_n <= 0.
double log_cdf_asymptotic(const ScalingParams& p, double x);

/// cdf_y over a grid, parallel over points (OpenMP). workers <= 0 uses the
/// OpenMP default team size.
std::vector<double> cdf_y_grid(const GinibreLaw& law, std::span<const double> ys,
                               int workers = 0);

/// Serial reference for cdf_y_grid.
std::vector<double> cdf_y_grid_serial(const GinibreLaw& law,
                                      std::span<const double> ys);

}  // namespace ginirate

#endif  // GINIRATE_GINIBRE_EXACT_HPP
