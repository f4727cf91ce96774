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
#include <complex>
#include <limits>

#include "ginirate/distances.hpp"
#include "ginirate/errors.hpp"
#include "ginirate/ginibre_exact.hpp"
#include "ginirate/rng.hpp"
#include "ginirate/sampler.hpp"

using namespace ginirate;

namespace {

constexpr EntryDistribution kAll[] = {EntryDistribution::kComplexGaussian, EntryDistribution::kFourthRoots,
                                      EntryDistribution::kUnitCircle, EntryDistribution::kQuaternaryDiagonal};

// Exact law of the spectral radius of an n x n complex Ginibre matrix.
CdfFunction ginibre_radius_cdf(std::int64_t n) {
  return CdfFunction(
      [n](double r) { return r <= 0.0 ? 0.0 : std::exp(ginibre_log_cdf_radius(n, r)); }, 1e-3, 3.0);
}

}  // namespace

TEST_CASE("distribution tags round trip") {
  for (EntryDistribution d : kAll) CHECK(parse_distribution(tag_of(d)) == d);
  CHECK_FALSE(parse_distribution("bernoulli").has_value());
  CHECK_FALSE(parse_distribution("").has_value());
}

TEST_CASE("counter RNG is a pure function of its key") {
  CHECK(counter_bits(1, 2, 3, 0) == counter_bits(1, 2, 3, 0));
  CHECK(counter_bits(1, 2, 3, 0) != counter_bits(1, 3, 2, 0));
  CHECK(counter_bits(1, 2, 3, 0) != counter_bits(1, 2, 3, 1));
  CHECK(derive(7, 1) != derive(7, 2));
  CHECK(to_open_unit(0) > 0.0);
  CHECK(to_open_unit(~0ULL) < 1.0);
}

TEST_CASE("sample_matrix is deterministic and scaled by 1/sqrt(n)") {
  for (EntryDistribution d : kAll) {
    const ComplexMatrix a = sample_matrix(40, d, 11);
    CHECK(a == sample_matrix(40, d, 11));
    CHECK(a != sample_matrix(40, d, 12));
    CHECK(a.rows() == 40);
    CHECK(a.cols() == 40);
  }
  const ComplexMatrix f = sample_matrix(50, EntryDistribution::kFourthRoots, 3);
  for (Eigen::Index i = 0; i < f.size(); ++i) CHECK(std::abs(f(i)) == doctest::Approx(1.0 / std::sqrt(50.0)));
}

TEST_CASE("entry means are within the CLT bound for 512 x 512 fourth-root matrices") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ComplexMatrix m = sample_matrix(512, EntryDistribution::kFourthRoots, seed);
    CHECK(std::abs(m.mean()) <= 4.0 / 512);
  }
}

TEST_CASE("moment conditions") {
  // Exact enumeration of the four atoms.
  constexpr std::complex<double> kRoots[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> m1 = 0;
  std::complex<double> m2 = 0;
  double m_abs = 0;
  for (auto z : kRoots) {
    m1 += z / 4.0;
    m2 += z * z / 4.0;
    m_abs += std::norm(z) / 4.0;
  }
  CHECK(std::abs(m1) == 0.0);
  CHECK(std::abs(m2) == 0.0);
  CHECK(m_abs == 1.0);

  const MomentReport g = moment_check(EntryDistribution::kComplexGaussian, 1000000, 1);
  CHECK(g.mean_abs <= 5e-3);
  CHECK(g.second_abs <= 5e-3);
  CHECK(g.abs_square_error <= 5e-3);
  for (EntryDistribution d : {EntryDistribution::kFourthRoots, EntryDistribution::kUnitCircle,
                              EntryDistribution::kQuaternaryDiagonal}) {
    const MomentReport r = moment_check(d, 200000, 2);
    CHECK(r.mean_abs <= 1e-2);
    CHECK(r.second_abs <= 1e-2);
    CHECK(r.abs_square_error <= 1e-12);  // |x| = 1 for every atom
  }
  CHECK_THROWS_AS(moment_check(EntryDistribution::kUnitCircle, 99, 1), DomainError);
}

TEST_CASE("spectral radius of known matrices") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 2.0, 1.0, 0.5;
  CHECK(spectral_radius(d) == doctest::Approx(2.0).epsilon(1e-14));

  ComplexMatrix rot(2, 2);
  rot << 0.0, 1.0, -1.0, 0.0;
  CHECK(spectral_radius(rot) == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix p(2, 2);
  p << 1.0, 0.5, std::complex<double>(0.2, 0.3), 1.5;
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag.diagonal() << 0.3, -1.7;
  const ComplexMatrix similar = p * diag * p.inverse();
  CHECK(std::fabs(spectral_radius(similar) - 1.7) <= 1e-8);

  const SpectrumSample s = sample_spectrum(30, EntryDistribution::kUnitCircle, 5);
  CHECK(s.eigenvalues.size() == 30);
  double top = 0.0;
  for (auto z : s.eigenvalues) top = std::max(top, std::abs(z));
  CHECK(s.radius == top);
}

TEST_CASE("non-finite input is reported as an eigen failure") {
  ComplexMatrix bad = ComplexMatrix::Identity(3, 3);
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(spectral_radius(bad), NumericError);
}

TEST_CASE("sample_radii contracts") {
  const auto one = sample_radii(30, EntryDistribution::kFourthRoots, 1, 9, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == spectral_radius(sample_matrix(30, EntryDistribution::kFourthRoots, derive(9, 1))));

  const auto serial = sample_radii_serial(24, EntryDistribution::kQuaternaryDiagonal, 64, 4);
  CHECK(std::is_sorted(serial.begin(), serial.end()));
  CHECK(sample_radii(24, EntryDistribution::kQuaternaryDiagonal, 64, 4, 1) == serial);
  CHECK(sample_radii(24, EntryDistribution::kQuaternaryDiagonal, 64, 4, 8) == serial);
  CHECK_THROWS_AS(sample_radii(kMaxMonteCarloDimension + 1, EntryDistribution::kFourthRoots, 1, 1), DomainError);
  CHECK_THROWS_AS(sample_radii(30, EntryDistribution::kFourthRoots, 0, 1), DomainError);
}

TEST_CASE("Ginibre sampler agrees with the exact radius law") {
  // Small n keeps this quick; the acceptance suite repeats it at n = 256.
  for (std::int64_t n : {16LL, 64LL}) {
    const auto radii = sample_radii(n, EntryDistribution::kComplexGaussian, 800, 17);
    const KsResult ks = ks_one_sample(empirical_cdf(radii), ginibre_radius_cdf(n));
    CHECK(ks.statistic <= 1.63 / std::sqrt(800.0));
  }
}

TEST_CASE("unitary invariance: rotating the Ginibre matrix leaves the radius law") {
  // Multiply by a fixed unitary; the radius of U G is the same in law as that of G.
  const std::int64_t n = 48;
  const ComplexMatrix z = sample_matrix(n, EntryDistribution::kComplexGaussian, 1234);
  const Eigen::HouseholderQR<ComplexMatrix> qr(z);
  const ComplexMatrix u = qr.householderQ();
  std::vector<double> rotated;
  for (std::uint64_t j = 1; j <= 600; ++j) {
    rotated.push_back(spectral_radius(u * sample_matrix(n, EntryDistribution::kComplexGaussian, derive(50, j))));
  }
  const KsResult ks = ks_one_sample(empirical_cdf(rotated), ginibre_radius_cdf(n));
  CHECK(ks.statistic <= 1.63 / std::sqrt(600.0));
}

TEST_CASE("annulus construction and counting") {
  const ScalingParams p(512);
  const Annulus a = make_annulus(p, 0.0, 0.3);
  CHECK(a.inner == p.center());
  CHECK(a.outer == doctest::Approx(1.2868).epsilon(1e-3));
  CHECK_THROWS_AS(make_annulus(p, 1e6, 0.3), EmptyAnnulus);

  const SpectrumSample s = sample_spectrum(64, EntryDistribution::kFourthRoots, 2);
  CHECK(annulus_count(s, {0.0, INFINITY}) == 64);
  CHECK(annulus_count(s, {s.radius * 1.01, s.radius * 2}) == 0);
  CHECK(annulus_count(s, {s.radius, s.radius}) >= 1);

  const Annulus band = containment_band(512, 0.3);
  CHECK(band.inner == doctest::Approx(2.0 - a.outer).epsilon(1e-12));
  CHECK(band.outer == doctest::Approx(a.outer).epsilon(1e-12));
}
