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

#ifndef GINIRATE_DISTANCES_HPP
#define GINIRATE_DISTANCES_HPP

#include <functional>
#include <span>
#include <vector>

namespace ginirate {

/// Mass allowed outside a declared support bracket: F(lo) <= kSupportMass
/// and 1 - F(hi) <= kSupportMass.
inline constexpr double kSupportMass = 1e-12;

/// A distribution function on the real line plus a declared support bracket.
///
/// The wrapped callable is invoked concurrently by evaluate(), so it must be
/// safe to call from several threads at once.
class CdfFunction {
 public:
  using Eval = std::function<double(double)>;

  CdfFunction(Eval f, double lo, double hi);

  double operator()(double x) const { return f_(x); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  /// F at every x, OpenMP-parallel over points.
  std::vector<double> evaluate(std::span<const double> xs, int workers = 0) const;
  /// Serial reference for evaluate().
  std::vector<double> evaluate_serial(std::span<const double> xs) const;

 private:
  Eval f_;
  double lo_;
  double hi_;
};

/// Expands [lo, hi] outward (doubling steps) until F(lo) <= kSupportMass and
/// 1 - F(hi) <= kSupportMass. Throws DomainError if no bracket is found
/// within |x| <= 1e6.
CdfFunction with_found_support(CdfFunction::Eval f, double lo = -1.0, double hi = 1.0);

/// Lambda(x) = exp(-exp(-x)).
double gumbel_cdf(double x);
/// Lambda((x - location) / scale).
CdfFunction gumbel(double location = 0.0, double scale = 1.0);
/// x -> F(x - c), support shifted along with it.
CdfFunction shifted(const CdfFunction& f, double c);

struct SupResult {
  double value = 0.0;
  double location = 0.0;
};

struct W1Result {
  double value = 0.0;
  double quadrature_error = 0.0;
  int intervals = 0;
};

struct DistanceReport {
  double sup_value = 0.0;
  double sup_location = 0.0;
  double w1_value = 0.0;
  double quadrature_error = 0.0;
  int grid_points = 0;
};

inline constexpr int kDefaultSupGrid = 1024;

/// sup_x |F(x) - G(x)| up to tol: a uniform grid of grid_points (>= 512)
/// over [lo, hi], then golden-section refinement of |F - G| around each
/// grid-local maximum. Throws BracketTooNarrow if |F - G| exceeds tol at
/// either endpoint, DomainError for lo >= hi.
SupResult sup_distance(const CdfFunction& f, const CdfFunction& g, double lo, double hi,
                       double tol, int grid_points = kDefaultSupGrid, int workers = 0);

/// integral |F - G| dx over the hull of both support brackets. The bracket
/// is split at the sign changes of F - G (located by bisection) and each
/// piece is integrated by globally adaptive 7/15-point Gauss-Kronrod.
/// quadrature_error = Kronrod error estimate + tail bound
/// F(lo) + G(lo) + (1 - F(hi)) + (1 - G(hi)), valid for tails that decay at
/// least like e^{-|x|}. Throws NonConvergence when the interval cap is hit.
W1Result w1_distance(const CdfFunction& f, const CdfFunction& g, double tol,
                     int workers = 0);

/// Step CDF of a finite sample: F(x) = #{samples <= x} / m.
class EmpiricalCdf {
 public:
  /// Throws EmptySample for an empty sample.
  explicit EmpiricalCdf(std::vector<double> samples);

  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

  double operator()(double x) const;
  /// lim_{t -> x-} F(t)
  double left_limit(double x) const;

 private:
  std::vector<double> sorted_;
};

inline EmpiricalCdf empirical_cdf(std::vector<double> samples) {
  return EmpiricalCdf(std::move(samples));
}

/// Exact sup over the step function:
/// max_i max(|i/m - G(x_(i))|, |(i-1)/m - G(x_(i))|).
SupResult sup_distance_empirical(const EmpiricalCdf& e, const CdfFunction& g,
                                 int workers = 0);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// P(K > lambda) for the Kolmogorov distribution, 100-term alternating
/// series; returns 1 for lambda < 0.2 where the series is not yet resolved
/// (the true value there exceeds 1 - 1e-15).
double kolmogorov_survival(double lambda);

/// Two-sample Kolmogorov-Smirnov test, asymptotic p-value with effective
/// size m_a m_b / (m_a + m_b).
KsResult ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b);

/// One-sample Kolmogorov-Smirnov test against a continuous CDF.
KsResult ks_one_sample(const EmpiricalCdf& e, const CdfFunction& g, int workers = 0);

}  // namespace ginirate

#endif  // GINIRATE_DISTANCES_HPP
