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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ginirate/distances.hpp"
#include "ginirate/errors.hpp"
#include "oracles.hpp"

using namespace ginirate;

namespace {

double gumbel_quantile(double p) { return -std::log(-std::log(p)); }

CdfFunction logistic(double location, double scale) {
  return with_found_support([=](double x) { return 1.0 / (1.0 + std::exp(-(x - location) / scale)); });
}

CdfFunction normal(double mean, double sd) {
  return with_found_support(
      [=](double x) { return 0.5 * std::erfc(-(x - mean) / (sd * std::numbers::sqrt2)); });
}

// A random member of a small family of smooth continuous laws.
CdfFunction random_cdf(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> loc(-2.0, 2.0);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return gumbel(loc(rng), scale(rng));
    case 1:
      return logistic(loc(rng), scale(rng));
    default:
      return normal(loc(rng), scale(rng));
  }
}

double hull_lo(const CdfFunction& f, const CdfFunction& g) { return std::min(f.lo(), g.lo()); }
double hull_hi(const CdfFunction& f, const CdfFunction& g) { return std::max(f.hi(), g.hi()); }

double sup_of(const CdfFunction& f, const CdfFunction& g) {
  return sup_distance(f, g, hull_lo(f, g), hull_hi(f, g), 1e-10).value;
}

}  // namespace

TEST_CASE("gumbel_cdf") {
  CHECK(gumbel_cdf(0.0) == doctest::Approx(0.3678794411714423).epsilon(1e-15));
  CHECK(gumbel_cdf(50.0) == 1.0);
  CHECK(gumbel_cdf(-10.0) == 0.0);
  CHECK(gumbel_cdf(-std::log(std::log(2.0))) == doctest::Approx(0.5).epsilon(1e-15));
  const CdfFunction g = gumbel();
  CHECK(g(g.lo()) <= kSupportMass * (1 + 1e-9));
  CHECK(1.0 - g(g.hi()) <= kSupportMass);
}

TEST_CASE("sup distance of identical and shifted Gumbel laws") {
  const CdfFunction g = gumbel();
  const SupResult same = sup_distance(g, g, g.lo(), g.hi(), 1e-10);
  CHECK(same.value == 0.0);

  const CdfFunction moved = shifted(g, 0.1);
  const SupResult s = sup_distance(g, moved, -4.0, 30.0, 1e-10);
  const auto brute = oracle::grid_max_abs([&](double x) { return g(x) - moved(x); }, -5.0, 5.0, 1000001);
  CHECK(std::fabs(s.value - brute.value) <= 1e-9);
  CHECK(s.value == doctest::Approx(0.0367726).epsilon(1e-5));
  CHECK(std::fabs(s.location - 0.0504) <= 1e-3);
  CHECK(std::fabs(sup_distance(moved, g, -4.0, 30.0, 1e-10).value - s.value) <= 1e-14);
}

TEST_CASE("small shifts: sup / c -> max density = 1 / e") {
  const CdfFunction g = gumbel();
  double prev = INFINITY;
  for (double c : {0.1, 0.01, 0.001}) {
    const double ratio = sup_of(g, shifted(g, c)) / c;
    const double miss = std::fabs(ratio - 1.0 / std::numbers::e);
    CHECK(miss < prev);
    prev = miss;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("sup distance rejects a bracket that cuts off the gap") {
  const CdfFunction g = gumbel();
  CHECK_THROWS_AS(sup_distance(g, shifted(g, 0.5), -1.0, 1.0, 1e-10), BracketTooNarrow);
  CHECK_THROWS_AS(sup_distance(g, g, 1.0, 1.0, 1e-10), DomainError);
}

TEST_CASE("W1 translation identity") {
  const CdfFunction g = gumbel();
  CHECK(w1_distance(g, g, 1e-10).value == 0.0);
  for (double c : {0.1, 0.5, 1.0}) {
    const W1Result w = w1_distance(g, shifted(g, c), 1e-10);
    CHECK(std::fabs(w.value - c) <= 1e-6);
    CHECK(w.quadrature_error <= 1e-9);
  }
  const CdfFunction n = normal(0.3, 1.4);
  CHECK(std::fabs(w1_distance(n, shifted(n, -0.7), 1e-10).value - 0.7) <= 1e-6);
}

TEST_CASE("W1 against a rescaled Gumbel law") {
  // The gap Lambda(x) - Lambda(x / 1.1) changes sign at 0.
  const CdfFunction g = gumbel();
  const CdfFunction wide = gumbel(0.0, 1.1);
  const double brute = oracle::trapezoid_abs([&](double x) { return g(x) - wide(x); }, -10.0, 60.0, 2000001);
  const W1Result w = w1_distance(g, wide, 1e-10);
  CHECK(std::fabs(w.value - brute) <= 1e-6);
  CHECK(w.value == doctest::Approx(0.10159835).epsilon(1e-6));
}

TEST_CASE("empirical CDF steps") {
  const EmpiricalCdf e = empirical_cdf({3.0, 1.0, 2.0});
  CHECK(e(0.5) == 0.0);
  CHECK(e(1.0) == doctest::Approx(1.0 / 3));
  CHECK(e(2.5) == doctest::Approx(2.0 / 3));
  CHECK(e(3.0) == 1.0);
  CHECK(e.left_limit(3.0) == doctest::Approx(2.0 / 3));

  const EmpiricalCdf one = empirical_cdf({0.0});
  CHECK(one(-1e-300) == 0.0);
  CHECK(one(0.0) == 1.0);

  const EmpiricalCdf dup = empirical_cdf({1.0, 1.0});
  CHECK(dup.left_limit(1.0) == 0.0);
  CHECK(dup(1.0) == 1.0);

  CHECK_THROWS_AS(empirical_cdf({}), EmptySample);
}

TEST_CASE("empirical sup distance") {
  const CdfFunction g = gumbel();
  std::vector<double> ideal;
  for (int i = 1; i <= 100; ++i) ideal.push_back(gumbel_quantile((i - 0.5) / 100));
  CHECK(sup_distance_empirical(empirical_cdf(ideal), g).value == doctest::Approx(0.005).epsilon(1e-9));
  CHECK(sup_distance_empirical(empirical_cdf({gumbel_quantile(0.5)}), g).value ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("empirical sup equals a dense-grid brute force") {
  const CdfFunction g = gumbel();
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int c = 0; c < 20; ++c) {
    const int m = 1 + c % 20;
    std::vector<double> xs;
    for (int i = 0; i < m; ++i) xs.push_back(gumbel_quantile(u(rng)));
    const EmpiricalCdf e = empirical_cdf(xs);
    const double exact = sup_distance_empirical(e, g).value;
    // Grid spacing 1.5e-6 bounds the miss at a jump by max density times spacing.
    const auto brute = oracle::grid_max_abs([&](double x) { return e(x) - g(x); }, -5.0, 10.0, 10000001);
    CHECK(std::fabs(exact - brute.value) <= 1e-6);
  }
}

TEST_CASE("metric symmetry and triangle inequality on random triples") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const CdfFunction f = random_cdf(rng);
    const CdfFunction g = random_cdf(rng);
    const CdfFunction h = random_cdf(rng);
    const double fg = sup_of(f, g);
    const double gh = sup_of(g, h);
    const double fh = sup_of(f, h);
    CHECK(fh <= fg + gh + 1e-9);
    CHECK(std::fabs(fg - sup_of(g, f)) <= 1e-9);
    const double wfg = w1_distance(f, g, 1e-9).value;
    const double wgh = w1_distance(g, h, 1e-9).value;
    const double wfh = w1_distance(f, h, 1e-9).value;
    CHECK(wfh <= wfg + wgh + 1e-7);
    CHECK(std::fabs(wfg - w1_distance(g, f, 1e-9).value) <= 1e-7);
  }
}

TEST_CASE("Kolmogorov survival function") {
  CHECK(kolmogorov_survival(0.0) == 1.0);
  CHECK(kolmogorov_survival(0.1) == 1.0);
  CHECK(kolmogorov_survival(1.3581) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(kolmogorov_survival(1.6276) == doctest::Approx(0.01).epsilon(1e-3));
  CHECK(kolmogorov_survival(0.5) == doctest::Approx(0.9639452436648751).epsilon(1e-10));
}

TEST_CASE("two-sample KS edge cases") {
  const EmpiricalCdf a = empirical_cdf({1.0, 2.0, 3.0, 4.0});
  const KsResult same = ks_two_sample(a, a);
  CHECK(same.statistic == 0.0);
  CHECK(same.p_value == 1.0);
  const KsResult apart = ks_two_sample(a, empirical_cdf({10.0, 11.0}));
  CHECK(apart.statistic == 1.0);
  const KsResult ties = ks_two_sample(empirical_cdf({1.0, 1.0, 2.0}), empirical_cdf({1.0, 2.0, 2.0}));
  CHECK(ties.statistic == doctest::Approx(1.0 / 3));
}

TEST_CASE("two-sample KS under the null") {
  // Same generator, different seeds, m = 1000 each. The statistic should
  // exceed 1.63 sqrt(2/1000) in about 1% of runs; 12 is the 99.9% binomial
  // quantile of the exceedance count over 500 runs at rate 1%.
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int exceed = 0;
  int low_p = 0;
  int below_half = 0;
  constexpr int kRuns = 500;
  for (int run = 0; run < kRuns; ++run) {
    std::mt19937_64 ra(1000 + 2 * run);
    std::mt19937_64 rb(1001 + 2 * run);
    std::vector<double> xa(1000);
    std::vector<double> xb(1000);
    for (double& x : xa) x = gumbel_quantile(u(ra));
    for (double& x : xb) x = gumbel_quantile(u(rb));
    const KsResult r = ks_two_sample(empirical_cdf(xa), empirical_cdf(xb));
    if (r.statistic > 1.63 * std::sqrt(2.0 / 1000)) ++exceed;
    if (r.p_value < 0.01) ++low_p;
    if (r.p_value < 0.5) ++below_half;
  }
  CHECK(exceed <= 12);
  CHECK(low_p <= 12);
  CHECK(below_half > 0.4 * kRuns);
  CHECK(below_half < 0.6 * kRuns);
}

TEST_CASE("parallel CDF evaluation equals the serial reference") {
  const CdfFunction n = normal(0.0, 1.0);
  std::vector<double> xs;
  for (double x = -8.0; x <= 8.0; x += 0.001) xs.push_back(x);
  CHECK(n.evaluate(xs, 3) == n.evaluate_serial(xs));
}
