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

#include "ginirate/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>

#include "ginirate/errors.hpp"

namespace ginirate {
namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights on the odd Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kPanelNodes = 15;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

void panel_nodes(double a, double b, std::span<double> xs) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < 7; ++i) {
    xs[2 * i] = mid - half * kKronrodNodes[i];
    xs[2 * i + 1] = mid + half * kKronrodNodes[i];
  }
  xs[14] = mid;
}

Panel panel_rule(double a, double b, std::span<const double> fx) {
  const double half = 0.5 * (b - a);
  double kronrod = kKronrodWeights[7] * fx[14];
  double gauss = kGaussWeights[3] * fx[14];
  for (int i = 0; i < 7; ++i) {
    const double pair = fx[2 * i] + fx[2 * i + 1];
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

// Evaluates len(spans) panels in one batch.
std::vector<Panel> evaluate_panels(const BatchIntegrand& f,
                                   std::span<const std::pair<double, double>> spans) {
  std::vector<double> xs(spans.size() * kPanelNodes);
  std::vector<double> fx(xs.size());
  for (std::size_t p = 0; p < spans.size(); ++p) {
    panel_nodes(spans[p].first, spans[p].second,
                std::span<double>(xs).subspan(p * kPanelNodes, kPanelNodes));
  }
  f(xs, fx);
  std::vector<Panel> panels;
  panels.reserve(spans.size());
  for (std::size_t p = 0; p < spans.size(); ++p) {
    panels.push_back(panel_rule(
        spans[p].first, spans[p].second,
        std::span<const double>(fx).subspan(p * kPanelNodes, kPanelNodes)));
  }
  return panels;
}

}  // namespace

QuadratureResult integrate_adaptive(const BatchIntegrand& f,
                                    std::span<const std::pair<double, double>> pieces,
                                    double tol, int max_intervals) {
  std::priority_queue<Panel> queue;
  double total_value = 0.0;
  double total_error = 0.0;
  for (const Panel& p : evaluate_panels(f, pieces)) {
    total_value += p.value;
    total_error += p.error;
    queue.push(p);
  }
  while (total_error > tol) {
    if (static_cast<int>(queue.size()) >= max_intervals) {
      throw NonConvergence("adaptive quadrature hit " + std::to_string(max_intervals) +
                           " intervals with error estimate " + std::to_string(total_error));
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const std::array<std::pair<double, double>, 2> halves = {{{worst.a, mid}, {mid, worst.b}}};
    total_value -= worst.value;
    total_error -= worst.error;
    for (const Panel& p : evaluate_panels(f, halves)) {
      total_value += p.value;
      total_error += p.error;
      queue.push(p);
    }
  }
  // Re-sum to shed the drift of the running totals.
  QuadratureResult result;
  result.intervals = static_cast<int>(queue.size());
  while (!queue.empty()) {
    result.value += queue.top().value;
    result.error += queue.top().error;
    queue.pop();
  }
  return result;
}

}  // namespace ginirate
