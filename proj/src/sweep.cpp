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

#include "ctsim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ctsim/channel.hpp"
#include "ctsim/parallel.hpp"
#include "ctsim/teleport.hpp"

namespace ctsim {

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

std::vector<double> RGrid::points() const {
  std::vector<double> out;
  const double span = stop - start;
  const auto n = static_cast<long>(std::floor(span / step + 1e-9));
  out.reserve(n + 1);
  for (long i = 0; i <= n; ++i) out.push_back(std::min(stop, start + static_cast<double>(i) * step));
  // Land exactly on stop when the last point is within rounding of it.
  if (!out.empty() && std::abs(out.back() - stop) < 1e-9) out.back() = stop;
  return out;
}

void SweepConfig::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  if (thetas.empty()) throw ConfigError("theta", "at least one value required");
  for (double t : thetas)
    if (!finite(t) || t < 0.0 || t > std::numbers::pi / 2 + 1e-12)
      throw ConfigError("theta", "values must lie in [0, pi/2]");
  if (encoding == Encoding::kCoherent && alphas.empty()) throw ConfigError("alpha", "required for the coherent encoding");
  if (encoding == Encoding::kVsp && !alphas.empty()) throw ConfigError("alpha", "only valid for the coherent encoding");
  for (double a : alphas)
    if (!finite(a) || a < 0.0) throw ConfigError("alpha", "values must be nonnegative");
  if (!finite(r_grid.start) || r_grid.start < 0.0 || r_grid.start > 1.0) throw ConfigError("r-start", "must lie in [0, 1]");
  if (!finite(r_grid.stop) || r_grid.stop < r_grid.start || r_grid.stop > 1.0)
    throw ConfigError("r-stop", "must lie in [r-start, 1]");
  if (!finite(r_grid.step) || r_grid.step <= 0.0) throw ConfigError("r-step", "must be positive");
  if (n_starts < 1) throw ConfigError("n-starts", "must be at least 1");
}

CurveRecord evaluate_point(Encoding encoding, double theta, std::optional<double> alpha, double r, bool svetlichny,
                           const MaximizeOptions& options) {
  const MsParams params(theta);
  const DampingParams damping = DampingParams::from_r(r);
  CurveRecord rec;
  rec.r = r;
  rec.theta = theta;
  rec.alpha = alpha;
  const CtFigures fig = encoding == Encoding::kVsp ? ct_pipeline_vsp(params, damping)
                                                   : ct_pipeline_coherent(params, alpha.value(), damping);
  rec.f_c = fig.f_c;
  rec.f_nc = fig.f_nc;
  rec.c_p = fig.c_p;
  rec.eta = fig.eta;
  if (svetlichny) {
    if (encoding == Encoding::kVsp) {
      const auto rho = damp_vsp(DensityOperator::from_ket(ms_state_vsp(params)), damping);
      rec.sv_max = maximize_svetlichny(rho, Encoding::kVsp, options).s_max;
    } else {
      rec.sv_max = maximize_svetlichny(evolve_ms_coherent_frame(params, alpha.value(), damping), options).s_max;
    }
  }
  return rec;
}

bool record_less(const CurveRecord& a, const CurveRecord& b) {
  if (a.theta != b.theta) return a.theta < b.theta;
  if (a.alpha != b.alpha) return !a.alpha || (b.alpha && *a.alpha < *b.alpha);
  return a.r < b.r;
}

std::vector<CurveRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  struct Point {
    double theta;
    std::optional<double> alpha;
    double r;
  };
  std::vector<double> thetas = cfg.thetas;
  std::vector<double> alphas = cfg.alphas;
  std::sort(thetas.begin(), thetas.end());
  std::sort(alphas.begin(), alphas.end());
  const auto rs = cfg.r_grid.points();

  std::vector<Point> points;
  for (double t : thetas) {
    if (cfg.encoding == Encoding::kVsp) {
      for (double r : rs) points.push_back({t, std::nullopt, r});
    } else {
      for (double a : alphas)
        for (double r : rs) points.push_back({t, a, r});
    }
  }

  MaximizeOptions options;
  options.n_starts = cfg.n_starts;
  options.seed = cfg.seed;
  std::vector<CurveRecord> records(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const Point& p = points[i];
    records[i] = evaluate_point(cfg.encoding, p.theta, p.alpha, p.r, cfg.svetlichny, options);
  });
  std::stable_sort(records.begin(), records.end(), record_less);
  return records;
}

}  // namespace ctsim
