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

#ifndef GINIRATE_RATE_ANALYSIS_HPP
#define GINIRATE_RATE_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "ginirate/distances.hpp"
#include "ginirate/ginibre_exact.hpp"
#include "ginirate/sampler.hpp"

namespace ginirate {

/// F_n^Gin in the Y coordinate as a CdfFunction with a searched support.
CdfFunction ginibre_cdf_function(const GinibreLaw& law);

struct LeadingRates {
  double be_leading = 0.0;  // 2 log log n / (e log n)
  double w1_leading = 0.0;  // 2 log log n / log n
};

/// Throws GammaNonpositive for n < 164.
LeadingRates theoretical_rates(std::int64_t n);

struct RefinedRates {
  double be_refined = 0.0;
  double w1_refined = 0.0;
};

/// First-order expansion of the edge asymptotic in 1/gamma_n:
///   gap(x) = Lambda(x) e^{-x} (2x + x^2/2 - 2 log log n - log 2 pi) / gamma_n.
double refined_gap(const ScalingParams& p, double x);

/// be_refined = max |gap| (grid + golden section), w1_refined = integral
/// |gap| split at the two real roots of the quadratic factor.
RefinedRates refined_prediction(std::int64_t n);

/// Sup and W1 distances between F_n^Gin and Lambda. The sup search runs
/// over the hull of both declared supports.
DistanceReport exact_distance_profile(std::int64_t n, double tol, int workers = 0);

struct RateRow {
  std::int64_t n = 0;
  double gamma_n = 0.0;
  double sup_exact = 0.0;
  double sup_argmax = 0.0;
  double w1_exact = 0.0;
  double be_leading = 0.0;
  double w1_leading = 0.0;
  double be_refined = 0.0;
  double w1_refined = 0.0;
  double ratio_be_leading = 0.0;
  double ratio_be_refined = 0.0;
  double ratio_w1_leading = 0.0;
  double ratio_w1_refined = 0.0;
};

using RateCurve = std::vector<RateRow>;

/// One row per n (n_list sorted ascending, each n >= 164).
RateCurve rate_table(const std::vector<std::int64_t>& n_list, double tol, int workers = 0);

struct UniversalityGap {
  double sup_emp_vs_exact = 0.0;   // sup |F_emp - F_n^Gin| = one-sample KS statistic
  double sup_location = 0.0;
  double ks_p_value = 1.0;
  double sup_emp_vs_gumbel = 0.0;  // empirical Berry-Esseen statistic
  std::vector<double> y_values;    // sorted Monte Carlo Y_n sample
};

/// Monte Carlo estimate of sup_x |F_n(x) - F_n^Gin(x)| for entry law `dist`.
/// Needs 164 <= n <= 4096 and m >= 100.
UniversalityGap universality_gap(std::int64_t n, EntryDistribution dist, std::int64_t m,
                                 std::uint64_t seed, int workers = 0);

/// As above, from already sampled radii.
UniversalityGap universality_gap_from_radii(std::int64_t n, const std::vector<double>& radii,
                                            int workers = 0);

}  // namespace ginirate

#endif  // GINIRATE_RATE_ANALYSIS_HPP
