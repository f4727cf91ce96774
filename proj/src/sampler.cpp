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

#include "ginirate/sampler.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ginirate/errors.hpp"
#include "ginirate/parallel.hpp"
#include "ginirate/rng.hpp"

// OpenBLAS threads inside an OpenMP team oversubscribe the cores; pin them
// to one when the symbol is present.
extern "C" void openblas_set_num_threads(int) __attribute__((weak));

namespace ginirate {
namespace {

constexpr std::uint64_t kLawSalt = 0x6c61775f73616c74ULL;

}  // namespace

std::string_view tag_of(EntryDistribution dist) {
  switch (dist) {
    case EntryDistribution::kComplexGaussian:
      return "ginibre";
    case EntryDistribution::kFourthRoots:
      return "fourth_roots";
    case EntryDistribution::kUnitCircle:
      return "unit_circle";
    case EntryDistribution::kQuaternaryDiagonal:
      return "quaternary_diagonal";
  }
  return "unknown";
}

std::optional<EntryDistribution> parse_distribution(std::string_view tag) {
  for (auto d : {EntryDistribution::kComplexGaussian, EntryDistribution::kFourthRoots,
                 EntryDistribution::kUnitCircle, EntryDistribution::kQuaternaryDiagonal}) {
    if (tag == tag_of(d)) return d;
  }
  return std::nullopt;
}

std::complex<double> draw_entry(EntryDistribution dist, std::uint64_t key, std::uint64_t row,
                                std::uint64_t column) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const std::uint64_t bits = counter_bits(key, row, column, 0);
  switch (dist) {
    case EntryDistribution::kComplexGaussian: {
      // |x|^2 ~ Exp(1) and arg x ~ U[0, 2 pi) independently.
      const double modulus = std::sqrt(-std::log(to_open_unit(bits)));
      const double angle = two_pi * to_open_unit(counter_bits(key, row, column, 1));
      return std::polar(modulus, angle);
    }
    case EntryDistribution::kFourthRoots: {
      constexpr std::complex<double> roots[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      return roots[bits >> 62];
    }
    case EntryDistribution::kUnitCircle:
      return std::polar(1.0, two_pi * to_open_unit(bits));
    case EntryDistribution::kQuaternaryDiagonal: {
      constexpr double h = std::numbers::sqrt2 / 2.0;
      return {(bits >> 63) ? -h : h, ((bits >> 62) & 1) ? -h : h};
    }
  }
  return {};
}

ComplexMatrix sample_matrix(std::int64_t n, EntryDistribution dist, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_matrix needs n >= 1");
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  // Salting the key with the law keeps equal seeds independent across laws.
  const std::uint64_t key = derive(seed, kLawSalt + static_cast<std::uint64_t>(dist));
  ComplexMatrix m(n, n);
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t i = 0; i < n; ++i) {
      m(i, j) = norm * draw_entry(dist, key, static_cast<std::uint64_t>(i),
                                  static_cast<std::uint64_t>(j));
    }
  }
  return m;
}

MomentReport moment_check(EntryDistribution dist, std::int64_t m, std::uint64_t seed) {
  if (m < 100) throw DomainError("moment_check needs m >= 100");
  std::complex<double> first = 0.0;
  std::complex<double> second = 0.0;
  double abs_square = 0.0;
  for (std::int64_t i = 0; i < m; ++i) {
    const auto x = draw_entry(dist, seed, static_cast<std::uint64_t>(i), 0);
    first += x;
    second += x * x;
    abs_square += std::norm(x);
  }
  const auto md = static_cast<double>(m);
  return {std::abs(first / md), std::abs(second / md), std::fabs(abs_square / md - 1.0)};
}

std::vector<std::complex<double>> eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("eigenvalues need a square matrix");
  const auto n = static_cast<lapack_int>(m.rows());
  if (n == 0) return {};
  ComplexMatrix work = m;
  std::vector<std::complex<double>> w(n);
  // std::complex<double> is layout-compatible with LAPACK's complex type.
  auto* a = reinterpret_cast<lapack_complex_double*>(work.data());
  auto* values = reinterpret_cast<lapack_complex_double*>(w.data());
  const lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a, n, values, nullptr, 1, nullptr, 1);
  if (info != 0) {
    throw EigenFailure("zgeev failed with info = " + std::to_string(info));
  }
  return w;
}

double spectral_radius(const ComplexMatrix& m) {
  double radius = 0.0;
  for (const auto& z : eigenvalues(m)) radius = std::max(radius, std::abs(z));
  return radius;
}

SpectrumSample sample_spectrum(std::int64_t n, EntryDistribution dist, std::uint64_t seed) {
  SpectrumSample s;
  s.n = n;
  s.eigenvalues = eigenvalues(sample_matrix(n, dist, seed));
  for (const auto& z : s.eigenvalues) s.radius = std::max(s.radius, std::abs(z));
  return s;
}

namespace {

void check_sampling(std::int64_t n, std::int64_t m) {
  if (n < 1 || n > kMaxMonteCarloDimension) {
    throw DomainError("Monte Carlo needs 1 <= n <= 4096, got " + std::to_string(n));
  }
  if (m < 1) throw DomainError("Monte Carlo needs m >= 1");
}

double radius_of_sample(std::int64_t n, EntryDistribution dist, std::uint64_t seed,
                        std::int64_t j) {
  try {
    return spectral_radius(sample_matrix(n, dist, derive(seed, static_cast<std::uint64_t>(j))));
  } catch (const EigenFailure& e) {
    throw EigenFailure(std::string(e.what()) + " (sample " + std::to_string(j) + ")");
  }
}

}  // namespace

std::vector<double> sample_radii(std::int64_t n, EntryDistribution dist, std::int64_t m,
                                 std::uint64_t seed, int workers) {
  check_sampling(n, m);
  if (openblas_set_num_threads != nullptr) openblas_set_num_threads(1);
  std::vector<double> radii(m);
  parallel_for(m, workers,
               [&](std::int64_t i) { radii[i] = radius_of_sample(n, dist, seed, i + 1); });
  std::sort(radii.begin(), radii.end());
  return radii;
}

std::vector<double> sample_radii_serial(std::int64_t n, EntryDistribution dist, std::int64_t m,
                                        std::uint64_t seed) {
  check_sampling(n, m);
  std::vector<double> radii;
  radii.reserve(m);
  for (std::int64_t j = 1; j <= m; ++j) radii.push_back(radius_of_sample(n, dist, seed, j));
  std::sort(radii.begin(), radii.end());
  return radii;
}

Annulus make_annulus(const ScalingParams& p, double r, double tau) {
  const double nd = static_cast<double>(p.n());
  Annulus a{p.center() + r / p.scale(), 1.0 + std::pow(nd, tau) / std::sqrt(nd)};
  if (!(a.inner <= a.outer)) {
    throw EmptyAnnulus("annulus inner radius " + std::to_string(a.inner) +
                       " exceeds outer radius " + std::to_string(a.outer));
  }
  a.inner = std::max(a.inner, 0.0);
  return a;
}

std::int64_t annulus_count(const SpectrumSample& s, const Annulus& a) {
  return std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(), [&](const auto& z) {
    const double m = std::abs(z);
    return a.inner <= m && m <= a.outer;
  });
}

Annulus containment_band(std::int64_t n, double tau) {
  const double nd = static_cast<double>(n);
  const double width = std::pow(nd, tau) / std::sqrt(nd);
  return {std::max(0.0, 1.0 - width), 1.0 + width};
}

}  // namespace ginirate
