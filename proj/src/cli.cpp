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

#include "ginirate/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "ginirate/errors.hpp"
#include "ginirate/rate_analysis.hpp"

namespace ginirate::cli {

std::int64_t parse_dimension(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw DomainError("not a number: '" + text + "'");
  }
  if (value < 1.0 || value != std::floor(value) || value > 9.0e18) {
    throw DomainError("n must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::int64_t>(value);
}

std::vector<std::int64_t> parse_dimension_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_dimension(item));
  if (out.empty()) throw DomainError("empty n list");
  return out;
}

Grid parse_grid(const std::string& text) {
  Grid g;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw DomainError("grid must be lo:hi:step, got '" + text + "'");
  }
  if (!(g.step > 0.0) || !(g.lo <= g.hi) || !std::isfinite(g.hi)) {
    throw DomainError("grid needs lo <= hi and step > 0, got '" + text + "'");
  }
  if ((g.hi - g.lo) / g.step > 1e7) throw DomainError("grid has more than 1e7 points");
  return g;
}

std::vector<double> grid_points(const Grid& g) {
  std::vector<double> xs;
  const auto count = static_cast<std::int64_t>(std::floor((g.hi - g.lo) / g.step + 1e-9)) + 1;
  xs.reserve(count);
  for (std::int64_t i = 0; i < count; ++i) xs.push_back(g.lo + static_cast<double>(i) * g.step);
  return xs;
}

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Common {
  std::uint64_t seed = 1;
  std::optional<int> workers;
  std::string out_path;
  double tol = 1e-10;
};

int resolve_workers(const Common& c) {
  if (c.workers) return *c.workers;
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw DomainError(std::string(kWorkersEnv) + " is not an integer: '" + env + "'");
    }
  }
  return 0;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Root seed of all randomness")->capture_default_str();
  sub->add_option("--workers", c.workers, "Worker threads (default: all cores)");
  sub->add_option("--out", c.out_path, "Output path (default: stdout)");
  sub->add_option("--tol", c.tol, "Absolute distance tolerance")->capture_default_str();
}

void emit(const Common& c, const std::string& payload, std::ostream& out) {
  if (c.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open output file '" + c.out_path + "'");
  file << payload;
}

EntryDistribution distribution_or_throw(const std::string& tag) {
  const auto d = parse_distribution(tag);
  if (!d) {
    throw DomainError("unknown distribution tag '" + tag +
                      "' (expected ginibre, fourth_roots, unit_circle, quaternary_diagonal)");
  }
  return *d;
}

void check_mc_dimension(std::int64_t n) {
  if (n < ScalingParams::kMinDimension || n > kMaxMonteCarloDimension) {
    throw DomainError("Monte Carlo n must lie in [164, 4096], got " + std::to_string(n));
  }
}

void check_common(const Common& c, int workers) {
  if (!(c.tol > 0.0)) throw DomainError("--tol must be positive");
  if (workers < 0) throw DomainError("--workers must be >= 1");
}

std::string rates_csv(const std::vector<std::int64_t>& ns, double tol, int workers) {
  std::string csv(kRatesHeader);
  csv += '\n';
  for (const RateRow& r : rate_table(ns, tol, workers)) {
    csv += std::to_string(r.n);
    for (double v : {r.gamma_n, r.sup_exact, r.sup_argmax, r.w1_exact, r.be_leading,
                     r.w1_leading, r.be_refined, r.w1_refined, r.ratio_be_leading,
                     r.ratio_be_refined, r.ratio_w1_leading, r.ratio_w1_refined}) {
      csv += ',';
      csv += num(v);
    }
    csv += '\n';
  }
  return csv;
}

std::string mc_csv(std::int64_t n, EntryDistribution dist, std::int64_t m, std::uint64_t seed,
                   int workers) {
  const ScalingParams p(n);
  std::string csv(kMcHeader);
  csv += '\n';
  const std::vector<double> radii = sample_radii(n, dist, m, seed, workers);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    csv += std::to_string(i + 1) + ',' + num(radii[i]) + ',' + num(p.to_y(radii[i])) + '\n';
  }
  return csv;
}

std::string cdf_csv(std::int64_t n, const Grid& grid, int workers) {
  const GinibreLaw law{ScalingParams(n)};
  const std::vector<double> xs = grid_points(grid);
  const std::vector<double> exact = cdf_y_grid(law, xs, workers);
  std::string csv(kCdfHeader);
  csv += '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double asymptotic = std::nan("");
    if (1.0 + xs[i] / law.params().gamma_n() > 0.0) {
      asymptotic = std::exp(log_cdf_asymptotic(law.params(), xs[i]));
    }
    csv += num(xs[i]) + ',' + num(gumbel_cdf(xs[i])) + ',' + num(exact[i]) + ',' +
           num(asymptotic) + '\n';
  }
  return csv;
}

std::string compare_json(std::int64_t n, const std::vector<std::string>& tags, std::int64_t m,
                         std::uint64_t seed, int workers) {
  nlohmann::json doc = nlohmann::json::object();
  for (const std::string& tag : tags) {
    const UniversalityGap gap = universality_gap(n, distribution_or_throw(tag), m, seed, workers);
    doc[tag] = {{"sup_emp_vs_exact", gap.sup_emp_vs_exact},
                {"ks_statistic", gap.sup_emp_vs_exact},
                {"ks_p_value", gap.ks_p_value},
                {"m", m},
                {"n", n},
                {"seed", seed}};
  }
  return doc.dump(2) + '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gumbel edge statistics of complex IID random matrices", "ginirate"};
  app.require_subcommand(1);

  Common rates_c;
  std::string n_list = "1e4,1e5,1e6,1e7,1e8";
  auto* rates = app.add_subcommand("rates", "Exact distances to the Gumbel law over an n ladder");
  rates->add_option("--n-list", n_list, "Comma-separated n values (1e6 notation allowed)")
      ->capture_default_str();
  add_common(rates, rates_c);

  Common mc_c;
  std::string mc_n;
  std::string mc_dist = "ginibre";
  std::int64_t mc_m = 1000;
  auto* mc = app.add_subcommand("mc", "Monte Carlo spectral radii");
  mc->add_option("--n", mc_n, "Matrix dimension in [164, 4096]")->required();
  mc->add_option("--dist", mc_dist, "Entry distribution tag")->capture_default_str();
  mc->add_option("-m,--samples", mc_m, "Number of matrices")->capture_default_str();
  add_common(mc, mc_c);

  Common cmp_c;
  std::string cmp_n = "256";
  std::string cmp_dists = "ginibre,fourth_roots";
  std::int64_t cmp_m = 500;
  auto* compare = app.add_subcommand("compare", "Empirical universality gap per entry law");
  compare->add_option("--n", cmp_n, "Matrix dimension in [164, 4096]")->capture_default_str();
  compare->add_option("--dists", cmp_dists, "Comma-separated entry distribution tags (>= 2)")
      ->capture_default_str();
  compare->add_option("-m,--samples", cmp_m, "Matrices per distribution (>= 100)")
      ->capture_default_str();
  add_common(compare, cmp_c);

  Common cdf_c;
  std::string cdf_n;
  std::string cdf_grid = "-2:5:0.05";
  auto* cdf = app.add_subcommand("cdf", "Gumbel, exact and asymptotic CDFs on a grid");
  cdf->add_option("--n", cdf_n, "Matrix dimension (>= 164)")->required();
  cdf->add_option("--grid", cdf_grid, "lo:hi:step")->capture_default_str();
  add_common(cdf, cdf_c);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  // Configuration is validated in full before any computation starts.
  const Common* common = nullptr;
  std::function<std::string(int)> job;
  try {
    if (rates->parsed()) {
      common = &rates_c;
      const auto ns = parse_dimension_list(n_list);
      for (std::int64_t n : ns) ScalingParams check(n);
      if (!std::is_sorted(ns.begin(), ns.end())) throw DomainError("--n-list must be ascending");
      job = [&, ns](int workers) { return rates_csv(ns, rates_c.tol, workers); };
    } else if (mc->parsed()) {
      common = &mc_c;
      const std::int64_t n = parse_dimension(mc_n);
      check_mc_dimension(n);
      const EntryDistribution dist = distribution_or_throw(mc_dist);
      if (mc_m < 1) throw DomainError("--samples must be >= 1");
      job = [&, n, dist](int workers) { return mc_csv(n, dist, mc_m, mc_c.seed, workers); };
    } else if (compare->parsed()) {
      common = &cmp_c;
      const std::int64_t n = parse_dimension(cmp_n);
      check_mc_dimension(n);
      std::vector<std::string> tags;
      std::stringstream ss(cmp_dists);
      std::string tag;
      std::set<std::string> seen;
      while (std::getline(ss, tag, ',')) {
        distribution_or_throw(tag);
        if (!seen.insert(tag).second) throw DomainError("duplicate distribution tag '" + tag + "'");
        tags.push_back(tag);
      }
      if (tags.size() < 2) throw DomainError("compare needs at least two distribution tags");
      if (cmp_m < 100) throw DomainError("--samples must be >= 100");
      job = [&, n, tags](int workers) { return compare_json(n, tags, cmp_m, cmp_c.seed, workers); };
    } else {
      common = &cdf_c;
      const std::int64_t n = parse_dimension(cdf_n);
      ScalingParams check(n);
      const Grid grid = parse_grid(cdf_grid);
      job = [&, n, grid](int workers) { return cdf_csv(n, grid, workers); };
    }
    const int workers = resolve_workers(*common);
    check_common(*common, workers);
    emit(*common, job(workers), out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericError;
  }
  return kSuccess;
}

}  // namespace ginirate::cli
