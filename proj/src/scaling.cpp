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

#include "ginirate/scaling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ginirate/errors.hpp"

namespace ginirate {

double gamma_of(std::int64_t n) {
  if (n < 2) {
    throw DomainError("gamma_n needs n >= 2, got " + std::to_string(n));
  }
  const double log_n = std::log(static_cast<double>(n));
  return log_n - 2.0 * std::log(log_n) - std::log(2.0 * std::numbers::pi);
}

ScalingParams::ScalingParams(std::int64_t n) : n_(n) {
  gamma_n_ = gamma_of(n);
  if (!(gamma_n_ > 0.0)) {
    throw GammaNonpositive("gamma_n = " + std::to_string(gamma_n_) +
                           " <= 0 for n = " + std::to_string(n) +
                           " (edge scaling needs n >= 164)");
  }
  const double nd = static_cast<double>(n);
  log_n_ = std::log(nd);
  loglog_n_ = std::log(log_n_);
  center_ = 1.0 + std::sqrt(gamma_n_ / (4.0 * nd));
  scale_ = std::sqrt(4.0 * nd * gamma_n_);
}

}  // namespace ginirate
