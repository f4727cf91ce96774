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

#ifndef GINIRATE_SCALING_HPP
#define GINIRATE_SCALING_HPP

#include <cstdint>

namespace ginirate {

/// Edge normalization of the spectral radius of an n x n IID matrix.
///
/// gamma_n = log n - 2 log log n - log(2 pi), and the rescaled radius is
///   Y_n = scale * (radius - center),
///   center = 1 + sqrt(gamma_n / (4n)),  scale = sqrt(4 n gamma_n).
/// All logarithms are natural. Construction requires gamma_n > 0, which
/// holds exactly for n >= kMinDimension.
class ScalingParams {
 public:
  static constexpr std::int64_t kMinDimension = 164;

  /// Throws GammaNonpositive when gamma_n <= 0 (n < 164).
  explicit ScalingParams(std::int64_t n);

  std::int64_t n() const { return n_; }
  double log_n() const { return log_n_; }
  double loglog_n() const { return loglog_n_; }
  double gamma_n() const { return gamma_n_; }
  double center() const { return center_; }
  double scale() const { return scale_; }

  double to_y(double radius) const { return scale_ * (radius - center_); }
  double from_y(double y) const { return center_ + y / scale_; }

 private:
  std::int64_t n_;
  double log_n_;
  double loglog_n_;
  double gamma_n_;
  double center_;
  double scale_;
};

inline ScalingParams make_scaling(std::int64_t n) { return ScalingParams(n); }

// gamma_n without the positivity check; valid for any n >= 2.
double gamma_of(std::int64_t n);

}  // namespace ginirate

#endif  // GINIRATE_SCALING_HPP
