// Copyright 2026 The ctsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctsim/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ctsim {
namespace {

// One Nelder-Mead run with the dimension-adaptive coefficients of Gao & Han,
// which behave better than the textbook ones beyond a handful of parameters.
SimplexResult run_once(const Objective& f, const std::vector<double>& x0, const SimplexOptions& opt, int budget) {
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 1.0 / (2.0 * dn);
  const double shrink = 1.0 - 1.0 / dn;

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(std::span<const double>(x));
  };
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  while (evals < budget) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double x_spread = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) x_spread = std::max(x_spread, std::abs(pts[i][j] - pts[best][j]));
    if (vals[worst] - vals[best] <= opt.f_tolerance && x_spread <= std::sqrt(opt.f_tolerance)) break;
    if (x_spread <= opt.x_tolerance) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / dn;

    for (std::size_t j = 0; j < n; ++j) trial[j] = centroid[j] + reflect * (centroid[j] - pts[worst][j]);
    const double f_reflect = eval(trial);
    if (f_reflect < vals[best]) {
      for (std::size_t j = 0; j < n; ++j) trial2[j] = centroid[j] + expand * (trial[j] - centroid[j]);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        pts[worst] = trial2;
        vals[worst] = f_expand;
      } else {
        pts[worst] = trial;
        vals[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < vals[second]) {
      pts[worst] = trial;
      vals[worst] = f_reflect;
      continue;
    }
    const bool outside = f_reflect < vals[worst];
    for (std::size_t j = 0; j < n; ++j) {
      const double from = outside ? trial[j] : pts[worst][j];
      trial2[j] = centroid[j] + contract * (from - centroid[j]);
    }
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : vals[worst])) {
      pts[worst] = trial2;
      vals[worst] = f_contract;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) pts[i][j] = pts[best][j] + shrink * (pts[i][j] - pts[best][j]);
      vals[i] = eval(pts[i]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  return {pts[best], vals[best], evals};
}

}  // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& options) {
  if (x0.empty()) throw std::invalid_argument("nelder_mead: empty parameter vector");
  SimplexResult result = run_once(f, x0, options, options.max_evaluations);
  int used = result.evaluations;
  for (int k = 0; k < options.restarts && used < options.max_evaluations; ++k) {
    SimplexOptions again = options;
    again.initial_step = options.initial_step * 0.25;
    SimplexResult next = run_once(f, result.x, again, options.max_evaluations - used);
    used += next.evaluations;
    const bool improved = next.value < result.value - options.f_tolerance;
    if (next.value < result.value) {
      next.evaluations = used;
      result = std::move(next);
    }
    if (!improved) break;
  }
  result.evaluations = used;
  return result;
}

}  // namespace ctsim
