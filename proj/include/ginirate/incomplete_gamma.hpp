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

#ifndef GINIRATE_INCOMPLETE_GAMMA_HPP
#define GINIRATE_INCOMPLETE_GAMMA_HPP

namespace ginirate {

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
///
/// Series for x < a + 1, Lentz continued fraction for Q = 1 - P otherwise.
/// The common prefactor x^a e^{-x} / Gamma(a + 1) is formed in log space
/// through log_gamma_prefactor(), so large a near x stays accurate.
/// Throws DomainError for a <= 0 or x < 0, NonConvergence past the
/// iteration cap.
double reg_lower_gamma(double a, double x);

/// Q(a, x) = 1 - P(a, x), computed without cancellation.
double reg_upper_gamma(double a, double x);

/// log(x^a e^{-x} / Gamma(a + 1)). For integer a this is the log Poisson
/// mass at a with mean x. Written as -a * phi((x - a) / a) minus the Stirling
/// terms, with phi(t) = t - log(1 + t), so it keeps full relative accuracy
/// when a and x are both large and close.
long double log_gamma_prefactor(long double a, long double x);

// t - log1p(t), accurate for small |t|.
long double log1p_deficit(long double t);

/// sum_{j >= 0} x^j / ((a+1)...(a+j)), so that
/// P(a, x) = exp(log_gamma_prefactor(a, x)) * lower_gamma_series(a, x).
/// Converges for any x >= 0; needs O(sqrt(a)) terms when x is near a.
long double lower_gamma_series(long double a, long double x);

}  // namespace ginirate

#endif  // GINIRATE_INCOMPLETE_GAMMA_HPP
