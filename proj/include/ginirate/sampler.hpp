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

#ifndef GINIRATE_SAMPLER_HPP
#define GINIRATE_SAMPLER_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ginirate/scaling.hpp"

namespace ginirate {

using ComplexMatrix = Eigen::MatrixXcd;

/// Complex entry laws with Ex = 0, E|x|^2 = 1, Ex^2 = 0 and bounded moments.
/// Real-valued laws are not representable: they have Ex^2 = E|x|^2 = 1.
enum class EntryDistribution {
  kComplexGaussian,     // (g1 + i g2) / sqrt(2)
  kFourthRoots,         // uniform on {1, i, -1, -i}
  kUnitCircle,          // e^{i theta}, theta ~ U[0, 2 pi)
  kQuaternaryDiagonal,  // uniform on {(+-1 +- i) / sqrt(2)}
};

/// Command-line tag: ginibre, fourth_roots, unit_circle, quaternary_diagonal.
std::string_view tag_of(EntryDistribution dist);
std::optional<EntryDistribution> parse_distribution(std::string_view tag);

/// One draw of x for matrix entry (row, column) under `key`.
std::complex<double> draw_entry(EntryDistribution dist, std::uint64_t key, std::uint64_t row,
                                std::uint64_t column);

/// n x n matrix with entries x_ij / sqrt(n); a pure function of (n, dist, seed).
ComplexMatrix sample_matrix(std::int64_t n, EntryDistribution dist, std::uint64_t seed);

struct MomentReport {
  double mean_abs = 0.0;           // |mean of x|
  double second_abs = 0.0;         // |mean of x^2|
  double abs_square_error = 0.0;   // |mean of |x|^2 - 1|
};

/// Empirical moments over m >= 100 draws from stream `seed`.
MomentReport moment_check(EntryDistribution dist, std::int64_t m, std::uint64_t seed);

/// All eigenvalues of a dense complex matrix (LAPACK zgeev, no vectors).
/// Throws EigenFailure when the QR iteration does not converge.
std::vector<std::complex<double>> eigenvalues(const ComplexMatrix& m);

/// max_i |sigma_i| over the full spectrum.
double spectral_radius(const ComplexMatrix& m);

struct SpectrumSample {
  std::int64_t n = 0;
  std::vector<std::complex<double>> eigenvalues;
  double radius = 0.0;
};

SpectrumSample sample_spectrum(std::int64_t n, EntryDistribution dist, std::uint64_t seed);

/// Largest n accepted for Monte Carlo sampling.
inline constexpr std::int64_t kMaxMonteCarloDimension = 4096;

/// Radii of sample_matrix(n, dist, derive(seed, j)) for j = 1..m, sorted
/// ascending. OpenMP-parallel over samples; the output does not depend on
/// `workers` (<= 0: all cores). EigenFailure is rethrown with the sample
/// index in its message.
std::vector<double> sample_radii(std::int64_t n, EntryDistribution dist, std::int64_t m,
                                 std::uint64_t seed, int workers = 0);

/// Serial reference for sample_radii.
std::vector<double> sample_radii_serial(std::int64_t n, EntryDistribution dist, std::int64_t m,
                                        std::uint64_t seed);

struct Annulus {
  double inner = 0.0;
  double outer = 0.0;
};

/// Omega_r = { z : center + r / scale <= |z| <= 1 + n^tau / sqrt(n) }.
/// Throws EmptyAnnulus when inner > outer.
Annulus make_annulus(const ScalingParams& p, double r, double tau);

/// Number of eigenvalues with inner <= |sigma_i| <= outer.
std::int64_t annulus_count(const SpectrumSample& s, const Annulus& a);

/// The containment band [1 - n^tau / sqrt(n), 1 + n^tau / sqrt(n)].
Annulus containment_band(std::int64_t n, double tau);

}  // namespace ginirate

#endif  // GINIRATE_SAMPLER_HPP
