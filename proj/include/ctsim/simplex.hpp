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

#pragma once

// Nelder-Mead downhill simplex minimization.

#include <functional>
#include <span>
#include <vector>

namespace ctsim {

struct SimplexOptions {
  double initial_step = 0.5;
  double f_tolerance = 1e-8;  // stop when the simplex spread in f falls below this
  double x_tolerance = 1e-10;
  int max_evaluations = 20000;
  int restarts = 2;  // re-seed the simplex around the best point this many times
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` starting from `x0`.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& options = {});

}  // namespace ctsim
