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

#ifndef GINIRATE_QUADRATURE_HPP
#define GINIRATE_QUADRATURE_HPP

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace ginirate {

/// Evaluates an integrand at every abscissa of `xs`, writing into `out`.
/// Batching lets callers fan the 15 Kronrod nodes of a panel out to threads.
using BatchIntegrand = std::function<void(std::span<const double> xs, std::span<double> out)>;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

inline constexpr int kMaxQuadratureIntervals = 4000;

/// Globally adaptive G7/K15 over the union of `pieces`: the panel with the
/// largest |K15 - G7| is bisected until the summed estimate is <= tol.
/// The integrand should be smooth on every piece. Throws NonConvergence
/// past max_intervals panels.
QuadratureResult integrate_adaptive(const BatchIntegrand& f,
                                    std::span<const std::pair<double, double>> pieces,
                                    double tol,
                                    int max_intervals = kMaxQuadratureIntervals);

}  // namespace ginirate

#endif  // GINIRATE_QUADRATURE_HPP
