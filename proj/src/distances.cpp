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

#include "ginirate/distances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ginirate/errors.hpp"
#include "ginirate/parallel.hpp"
#include "ginirate/quadrature.hpp"

namespace ginirate {

CdfFunction::CdfFunction(Eval f, double lo, double hi) : f_(std::move(f)), lo_(lo), hi_(hi) {
  if (!f_) throw DomainError("CdfFunction needs a callable");
  if (!(lo < hi)) throw DomainError("CdfFunction support needs lo < hi");
}

std::vector<double> CdfFunction::evaluate(std::span<const double> xs, int workers) const {
  std::vector<double> out(xs.size());
  parallel_for(static_cast<std::int64_t>(xs.size()), workers,
               [&](std::int64_t i) { out[i] = f_(xs[i]); });
  return out;
}

std::vector<double> CdfFunction::evaluate_serial(std::span<const double> xs) const {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(f_(x));
  return out;
}

CdfFunction with_found_support(CdfFunction::Eval f, double lo, double hi) {
  constexpr double kLimit = 1e6;
  double step = 1.0;
  while (f(lo) > kSupportMass) {
    lo -= step;
    step *= 2.0;
    if (lo < -kLimit) throw DomainError("no lower support bracket within 1e6");
  }
  step = 1.0;
  while (1.0 - f(hi) > kSupportMass) {
    hi += step;
    step *= 2.0;
    if (hi > kLimit) throw DomainError("no upper support bracket within 1e6");
  }
  return CdfFunction(std::move(f), lo, hi);
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

CdfFunction gumbel(double location, double scale) {
  if (!(scale > 0.0)) throw DomainError("Gumbel scale must be positive");
  // Lambda(lo) = kSupportMass and 1 - Lambda(hi) <= kSupportMass.
  const double lo = -std::log(-std::log(kSupportMass));
  const double hi = -std::log(kSupportMass);
  return CdfFunction([=](double x) { return gumbel_cdf((x - location) / scale); },
                     location + scale * lo, location + scale * hi);
}

CdfFunction shifted(const CdfFunction& f, double c) {
  return CdfFunction([f, c](double x) { return f(x - c); }, f.lo() + c, f.hi() + c);
}

namespace {

constexpr double kInvGolden = 0.6180339887498948482;

// Maximizes |d| on [a, b] by golden-section search.
SupResult golden_max(const std::function<double(double)>& d, double a, double b) {
  double x1 = b - kInvGolden * (b - a);
  double x2 = a + kInvGolden * (b - a);
  double f1 = std::fabs(d(x1));
  double f2 = std::fabs(d(x2));
  const double xtol = 1e-10 * (1.0 + std::fabs(a) + std::fabs(b));
  while (b - a > xtol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvGolden * (b - a);
      f2 = std::fabs(d(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvGolden * (b - a);
      f1 = std::fabs(d(x1));
    }
  }
  return f1 >= f2 ? SupResult{f1, x1} : SupResult{f2, x2};
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[i] = (i == count - 1) ? hi : lo + (hi - lo) * i / (count - 1);
  }
  return xs;
}

std::vector<double> differences(const CdfFunction& f, const CdfFunction& g,
                                std::span<const double> xs, int workers) {
  std::vector<double> d(xs.size());
  parallel_for(static_cast<std::int64_t>(xs.size()), workers,
               [&](std::int64_t i) { d[i] = f(xs[i]) - g(xs[i]); });
  return d;
}

constexpr int kMaxRefinedPeaks = 16;

}  // namespace

SupResult sup_distance(const CdfFunction& f, const CdfFunction& g, double lo, double hi,
                       double tol, int grid_points, int workers) {
  if (!(lo < hi)) throw DomainError("sup_distance needs lo < hi");
  grid_points = std::max(grid_points, 512);
  const std::vector<double> xs = linspace(lo, hi, grid_points);
  const std::vector<double> d = differences(f, g, xs, workers);
  if (std::fabs(d.front()) > tol || std::fabs(d.back()) > tol) {
    throw BracketTooNarrow("|F - G| = " + std::to_string(std::max(std::fabs(d.front()), std::fabs(d.back()))) +
                           " at the bracket ends [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "] exceeds tol");
  }

  SupResult best{0.0, xs.front()};
  std::vector<int> peaks;
  for (int i = 0; i < grid_points; ++i) {
    const double v = std::fabs(d[i]);
    if (v > best.value) best = {v, xs[i]};
    const bool left_ok = i == 0 || v >= std::fabs(d[i - 1]);
    const bool right_ok = i == grid_points - 1 || v >= std::fabs(d[i + 1]);
    if (left_ok && right_ok && v > tol) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(),
            [&](int a, int b) { return std::fabs(d[a]) > std::fabs(d[b]); });
  if (peaks.size() > kMaxRefinedPeaks) peaks.resize(kMaxRefinedPeaks);

  const auto gap = [&](double x) { return f(x) - g(x); };
  for (int i : peaks) {
    const double a = xs[std::max(i - 1, 0)];
    const double b = xs[std::min(i + 1, grid_points - 1)];
    const SupResult local = golden_max(gap, a, b);
    if (local.value > best.value) best = local;
  }
  return best;
}

W1Result w1_distance(const CdfFunction& f, const CdfFunction& g, double tol, int workers) {
  const double lo = std::min(f.lo(), g.lo());
  const double hi = std::max(f.hi(), g.hi());
  const std::vector<double> xs = linspace(lo, hi, kDefaultSupGrid);
  const std::vector<double> d = differences(f, g, xs, workers);
  const auto gap = [&](double x) { return f(x) - g(x); };

  // Split points: grid zeros and bisected sign changes.
  std::vector<double> cuts = {lo};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (d[i] == 0.0) {
      if (i > 0) cuts.push_back(xs[i]);
      continue;
    }
    if (d[i + 1] == 0.0 || (d[i] > 0.0) == (d[i + 1] > 0.0)) continue;
    double a = xs[i];
    double b = xs[i + 1];
    const bool a_positive = d[i] > 0.0;
    for (int it = 0; it < 200 && b - a > 1e-13 * (1.0 + std::fabs(a)); ++it) {
      const double m = 0.5 * (a + b);
      const double dm = gap(m);
      if (dm == 0.0) {
        a = b = m;
        break;
      }
      ((dm > 0.0) == a_positive ? a : b) = m;
    }
    cuts.push_back(0.5 * (a + b));
  }
  cuts.push_back(hi);

  std::vector<std::pair<double, double>> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) pieces.emplace_back(cuts[i], cuts[i + 1]);
  }

  const BatchIntegrand integrand = [&](std::span<const double> nodes, std::span<double> out) {
    parallel_for(static_cast<std::int64_t>(nodes.size()), workers,
                 [&](std::int64_t i) { out[i] = std::fabs(gap(nodes[i])); });
  };
  const QuadratureResult q = integrate_adaptive(integrand, pieces, tol);
  const double tails = f(lo) + g(lo) + (1.0 - f(hi)) + (1.0 - g(hi));
  return {q.value, q.error + tails, q.intervals};
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw EmptySample("empirical CDF needs at least one sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::left_limit(double x) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

SupResult sup_distance_empirical(const EmpiricalCdf& e, const CdfFunction& g, int workers) {
  const std::vector<double>& xs = e.sorted();
  const std::vector<double> gx = g.evaluate(xs, workers);
  const auto m = static_cast<double>(xs.size());
  SupResult best{0.0, xs.front()};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double upper = std::fabs(static_cast<double>(i + 1) / m - gx[i]);
    const double lower = std::fabs(static_cast<double>(i) / m - gx[i]);
    const double v = std::max(upper, lower);
    if (v > best.value) best = {v, xs[i]};
  }
  return best;
}

double kolmogorov_survival(double lambda) {
  if (!(lambda >= 0.2)) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1) ? term : -term;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  const std::vector<double>& xa = a.sorted();
  const std::vector<double>& xb = b.sorted();
  const auto ma = static_cast<double>(xa.size());
  const auto mb = static_cast<double>(xb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double stat = 0.0;
  while (i < xa.size() || j < xb.size()) {
    double v;
    if (j == xb.size() || (i < xa.size() && xa[i] <= xb[j])) {
      v = xa[i];
    } else {
      v = xb[j];
    }
    while (i < xa.size() && xa[i] == v) ++i;
    while (j < xb.size() && xb[j] == v) ++j;
    stat = std::max(stat, std::fabs(static_cast<double>(i) / ma - static_cast<double>(j) / mb));
  }
  const double effective = ma * mb / (ma + mb);
  return {stat, kolmogorov_survival(std::sqrt(effective) * stat)};
}

KsResult ks_one_sample(const EmpiricalCdf& e, const CdfFunction& g, int workers) {
  const double stat = sup_distance_empirical(e, g, workers).value;
  return {stat, kolmogorov_survival(std::sqrt(static_cast<double>(e.size())) * stat)};
}

}  // namespace ginirate
