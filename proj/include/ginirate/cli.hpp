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

#ifndef GINIRATE_CLI_HPP
#define GINIRATE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ginirate::cli {

enum ExitCode : int { kSuccess = 0, kConfigError = 2, kNumericError = 3 };

inline constexpr std::string_view kRatesHeader =
    "n,gamma_n,sup_exact,sup_argmax,w1_exact,be_leading,w1_leading,be_refined,w1_refined,"
    "ratio_be_leading,ratio_be_refined,ratio_w1_leading,ratio_w1_refined";
inline constexpr std::string_view kMcHeader = "index,radius,y_value";
inline constexpr std::string_view kCdfHeader = "x,gumbel,exact,asymptotic";

/// Environment variable consulted for the worker count when --workers is absent.
inline constexpr const char* kWorkersEnv = "GINIRATE_WORKERS";

/// "1e6", "1000000" -> 1000000. Throws DomainError unless the value is a
/// positive integer representable in 64 bits.
std::int64_t parse_dimension(const std::string& text);

/// "1e4,1e6" -> {10000, 1000000}.
std::vector<std::int64_t> parse_dimension_list(const std::string& text);

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};

/// "lo:hi:step" with lo <= hi and step > 0.
Grid parse_grid(const std::string& text);
std::vector<double> grid_points(const Grid& g);

/// Runs the driver on argv-style arguments (args[0] is the program name).
/// Output files go to --out, or to `out` when --out is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ginirate::cli

#endif  // GINIRATE_CLI_HPP
