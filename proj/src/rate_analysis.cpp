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

#include "ginirate/rate_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ginirate/errors.hpp"
#include "ginirate/quadrature.hpp"

namespace ginirate {

CdfFunction ginibre_cdf_function(const GinibreLaw& law) {
  return with_found_support([law](double y) { return law.cdf_y(y); });
}

LeadingRates theoretical_rates(std::int64_t n) {
  const ScalingParams p(n);
  const double w1 = 2.0 * p.loglog_n() / p.log_n();
  return {w1 / std::numbers::e, w1};
}

double refined_gap(const ScalingParams& p, double x) {
  const double c = 2.0 * p.loglog_n() + std::log(2.0 * std::numbers::pi);
  return gumbel_cdf(x) * std::exp(-x) * (2.0 * x + 0.5 * x * x - c) / p.gamma_n();
}

namespace {

// Beyond these the gap is below 1e-20 for every admissible n.
constexpr double kGapLo = -8.0;
constexpr double kGapHi = 60.0;

double refined_sup(const ScalingParams& p) {
  constexpr int kGrid = 8192;
  const auto at = [&](int i) { return kGapLo + (kGapHi - kGapLo) * i / (kGrid - 1); };
  int best = 0;
  double best_value = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double v = std::fabs(refined_gap(p, at(i)));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = at(std::max(best - 1, 0));
  double b = at(std::min(best + 1, kGrid - 1));
  constexpr double inv_golden = 0.6180339887498948482;
  while (b - a > 1e-12) {
    const double x1 = b - inv_golden * (b - a);
    const double x2 = a + inv_golden * (b - a);
    if (std::fabs(refined_gap(p, x1)) < std::fabs(refined_gap(p, x2))) {
      a = x1;
    } else {
      b = x2;
    }
  }
  return std::max(best_value, std::fabs(refined_gap(p, 0.5 * (a + b))));
}

double refined_w1(const ScalingParams& p) {
  const double c = 2.0 * p.loglog_n() + std::log(2.0 * std::numbers::pi);
  // Sign changes of x^2/2 + 2x - c.
  const double root = std::sqrt(4.0 + 2.0 * c);
  const std::array<std::pair<double, double>, 3> pieces = {
      {{kGapLo, -2.0 - root}, {-2.0 - root, -2.0 + root}, {-2.0 + root, kGapHi}}};
  const BatchIntegrand abs_gap = [&](std::span<const double> xs, std::span<double> out) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = std::fabs(refined_gap(p, xs[i]));
  };
  return integrate_adaptive(abs_gap, pieces, 1e-13).value;
}

}  // namespace

RefinedRates refined_prediction(std::int64_t n) {
  const ScalingParams p(n);
  return {refined_sup(p), refined_w1(p)};
}

DistanceReport exact_distance_profile(std::int64_t n, double tol, int workers) {
  const GinibreLaw law{ScalingParams(n)};
  const CdfFunction exact = ginibre_cdf_function(law);
  const CdfFunction limit = gumbel();
  const double lo = std::min(exact.lo(), limit.lo());
  const double hi = std::max(exact.hi(), limit.hi());
  const SupResult sup = sup_distance(exact, limit, lo, hi, tol, kDefaultSupGrid, workers);
  const W1Result w1 = w1_distance(exact, limit, tol, workers);
  return {sup.value, sup.location, w1.value, w1.quadrature_error, kDefaultSupGrid};
}

RateCurve rate_table(const std::vector<std::int64_t>& n_list, double tol, int workers) {
  if (!std::is_sorted(n_list.begin(), n_list.end())) {
    throw DomainError("rate_table needs an ascending n list");
  }
  RateCurve curve;
  curve.reserve(n_list.size());
  for (const std::int64_t n : n_list) {
    const ScalingParams p(n);
    const LeadingRates lead = theoretical_rates(n);
    const RefinedRates refined = refined_prediction(n);
    const DistanceReport exact = exact_distance_profile(n, tol, workers);
    RateRow row;
    row.n = n;
    row.gamma_n = p.gamma_n();
    row.sup_exact = exact.sup_value;
    row.sup_argmax = exact.sup_location;
    row.w1_exact = exact.w1_value;
    row.be_leading = lead.be_leading;
    row.w1_leading = lead.w1_leading;
    row.be_refined = refined.be_refined;
    row.w1_refined = refined.w1_refined;
    row.ratio_be_leading = row.sup_exact / row.be_leading;
    row.ratio_be_refined = row.sup_exact / row.be_refined;
    row.ratio_w1_leading = row.w1_exact / row.w1_leading;
    row.ratio_w1_refined = row.w1_exact / row.w1_refined;
    curve.push_back(row);
  }
  return curve;
}

UniversalityGap universality_gap_from_radii(std::int64_t n, const std::vector<double>& radii,
                                            int workers) {
  const ScalingParams p(n);
  std::vector<double> ys;
  ys.reserve(radii.size());
  for (double r : radii) ys.push_back(p.to_y(r));
  const EmpiricalCdf empirical(ys);
  const GinibreLaw law{p};
  const CdfFunction exact = ginibre_cdf_function(law);
  const SupResult vs_exact = sup_distance_empirical(empirical, exact, workers);
  UniversalityGap gap;
  gap.sup_emp_vs_exact = vs_exact.value;
  gap.sup_location = vs_exact.location;
  gap.ks_p_value =
      kolmogorov_survival(std::sqrt(static_cast<double>(empirical.size())) * vs_exact.value);
  gap.sup_emp_vs_gumbel = sup_distance_empirical(empirical, gumbel(), workers).value;
  gap.y_values = empirical.sorted();
  return gap;
}

UniversalityGap universality_gap(std::int64_t n, EntryDistribution dist, std::int64_t m,
                                 std::uint64_t seed, int workers) {
  if (n < ScalingParams::kMinDimension || n > kMaxMonteCarloDimension) {
    throw DomainError("universality_gap needs 164 <= n <= 4096, got " + std::to_string(n));
  }
  if (m < 100) throw DomainError("universality_gap needs m >= 100");
  return universality_gap_from_radii(n, sample_radii(n, dist, m, seed, workers), workers);
}

}  // namespace ginirate
