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

// Parameter sweeps over (theta, alpha, r) producing one record per point.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsim/nonlocality.hpp"

namespace ctsim {

/// Invalid sweep configuration; `field()` names the offending option.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct RGrid {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.01;

  /// start, start + step, ... up to stop (inclusive within 1e-9 of a step).
  std::vector<double> points() const;
};

struct SweepConfig {
  Encoding encoding = Encoding::kVsp;
  std::vector<double> thetas;
  std::vector<double> alphas;  // coherent only
  RGrid r_grid;
  bool svetlichny = false;
  int n_starts = 64;
  std::uint64_t seed = 7;
  std::filesystem::path out_path;

  /// Throws ConfigError naming the field.
  void validate() const;
};

struct CurveRecord {
  double r = 0.0;
  double theta = 0.0;
  std::optional<double> alpha;
  double f_c = 0.0;
  double f_nc = 0.0;
  double c_p = 0.0;
  double eta = 0.0;
  std::optional<double> sv_max;
};

/// One record per grid point, ordered by (theta, alpha, r). Points are
/// evaluated concurrently; the result is independent of scheduling.
std::vector<CurveRecord> run_sweep(const SweepConfig& cfg);

/// Single grid point.
CurveRecord evaluate_point(Encoding encoding, double theta, std::optional<double> alpha, double r, bool svetlichny,
                           const MaximizeOptions& options);

/// Lexicographic (theta, alpha, r) order with VSP records (no alpha) first.
bool record_less(const CurveRecord& a, const CurveRecord& b);

}  // namespace ctsim
