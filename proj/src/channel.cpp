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

#include "ctsim/channel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ctsim {

DampingParams DampingParams::from_r(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("r must lie in [0, 1], got " + std::to_string(r));
  return DampingParams(r, std::sqrt((1.0 - r) * (1.0 + r)));
}

DampingParams DampingParams::from_rate_time(double gamma_rate, double t) {
  if (gamma_rate < 0.0 || t < 0.0) throw std::invalid_argument("rate and time must be nonnegative");
  const double x = gamma_rate * t;
  return DampingParams(std::sqrt(-std::expm1(-x)), std::exp(-0.5 * x));
}

double DampingParams::time_at_rate(double gamma_rate) const {
  if (r_ >= 1.0) return std::numeric_limits<double>::infinity();
  return -std::log1p(-r_ * r_) / gamma_rate;
}

namespace {

std::vector<int> strides_of(const Dims& dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) strides[i] = strides[i + 1] * dims[i + 1];
  return strides;
}

// Occupation of subsystem `s` for every basis index.
std::vector<int> occupations(const Dims& dims, int s) {
  const auto strides = strides_of(dims);
  const int total = total_dimension(dims);
  std::vector<int> occ(total);
  for (int x = 0; x < total; ++x) occ[x] = (x / strides[s]) % dims[s];
  return occ;
}

}  // namespace

DensityOperator damp_mode(const DensityOperator& rho, int mode, const DampingParams& p) {
  if (mode < 0 || mode >= rho.subsystem_count()) throw std::out_of_range("damp_mode: subsystem out of range");
  const Dims& dims = rho.dims();
  const int d = dims[mode];
  const int stride = strides_of(dims)[mode];
  const auto occ = occupations(dims, mode);
  const int total = rho.dimension();

  // kraus[k][n] = <n-k|K_k|n> = sqrt(C(n,k)) tau^{n-k} r^k
  std::vector<std::vector<double>> kraus(d, std::vector<double>(d, 0.0));
  for (int k = 0; k < d; ++k)
    for (int n = k; n < d; ++n) {
      const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
      const double t = (n - k == 0) ? 1.0 : std::pow(p.tau(), n - k);
      const double r = (k == 0) ? 1.0 : std::pow(p.r(), k);
      kraus[k][n] = std::exp(0.5 * log_binom) * t * r;
    }

  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (int y = 0; y < total; ++y)
    for (int x = 0; x < total; ++x) {
      Complex acc = 0.0;
      const int kmax = std::min(d - 1 - occ[x], d - 1 - occ[y]);
      for (int k = 0; k <= kmax; ++k)
        acc += kraus[k][occ[x] + k] * m(x + k * stride, y + k * stride) * kraus[k][occ[y] + k];
      out(x, y) = acc;
    }
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityOperator(dims, std::move(out));
}

DensityOperator damp_vsp(const DensityOperator& rho, const DampingParams& p) {
  if (rho.dims() != Dims{2, 2, 2}) throw std::invalid_argument("damp_vsp expects dims (2,2,2)");
  return damp_mode(damp_mode(rho, 1, p), 2, p);
}

DampedDyad damp_coherent_pair(double ket_amp, double bra_amp, const DampingParams& p) {
  if (std::abs(std::abs(ket_amp) - std::abs(bra_amp)) > 1e-12)
    throw std::invalid_argument("damp_coherent_pair: amplitudes must share a magnitude");
  // General real-amplitude rule <b|a>^{r^2}: exp(-r^2 (a-b)^2 / 2).
  const double factor = std::exp(-0.5 * p.r_sq() * (ket_amp - bra_amp) * (ket_amp - bra_amp));
  return {p.tau() * ket_amp, p.tau() * bra_amp, factor};
}

FrameOperator damp_frame(const FrameOperator& rho, const DampingParams& p) {
  const auto& kets = rho.kets();
  std::vector<FrameKet> damped;
  damped.reserve(kets.size());
  for (const auto& k : kets) {
    FrameKet out{k.qubit, k.modes};
    for (double& x : out.modes) x *= p.tau();
    damped.push_back(std::move(out));
  }
  ComplexMatrix c = rho.coeffs();
  for (std::size_t a = 0; a < kets.size(); ++a)
    for (std::size_t b = 0; b < kets.size(); ++b)
      for (std::size_t m = 0; m < kets[a].modes.size(); ++m)
        c(a, b) *= damp_coherent_pair(kets[a].modes[m], kets[b].modes[m], p).factor;
  return FrameOperator(std::move(damped), std::move(c));
}

FrameOperator ms_frame(const MsParams& params, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("coherent amplitude must be nonnegative");
  std::vector<FrameKet> kets{{0, {alpha, alpha}}, {1, {-alpha, -alpha}}, {0, {-alpha, -alpha}}};
  ComplexVector v(3);
  v << 1.0, params.c(), params.d();
  v /= std::sqrt(2.0 * ms_coherent_norm_squared(params, alpha));
  return FrameOperator(std::move(kets), v * v.adjoint());
}

FrameOperator evolve_ms_coherent_frame(const MsParams& params, double alpha, const DampingParams& p) {
  return damp_frame(ms_frame(params, alpha), p);
}

DensityOperator evolve_ms_coherent(const MsParams& params, const CoherentEncoding& enc, const DampingParams& p) {
  enc.validate();
  return evolve_ms_coherent_frame(params, enc.alpha, p).materialize(enc.n_max);
}

// ---------------------------------------------------------------------------
// Master-equation integrator

namespace {

struct Dissipator {
  std::vector<int> occ;  // occupation of the damped mode per basis index
  std::vector<int> up;   // index with one more quantum, -1 at the truncation edge
};

class Lindbladian {
 public:
  Lindbladian(const Dims& dims, const std::vector<int>& damped, double gamma) : gamma_(gamma) {
    const auto strides = strides_of(dims);
    const int total = total_dimension(dims);
    for (int s : damped) {
      Dissipator d;
      d.occ = occupations(dims, s);
      d.up.resize(total);
      for (int x = 0; x < total; ++x) d.up[x] = d.occ[x] + 1 < dims[s] ? x + strides[s] : -1;
      number_sum_.resize(total, 0.0);
      for (int x = 0; x < total; ++x) number_sum_[x] += d.occ[x];
      dissipators_.push_back(std::move(d));
    }
    if (number_sum_.empty()) number_sum_.assign(total, 0.0);
  }

  void apply(const ComplexMatrix& rho, ComplexMatrix& out) const {
    const auto total = rho.rows();
    for (Eigen::Index y = 0; y < total; ++y)
      for (Eigen::Index x = 0; x < total; ++x) {
        Complex acc = -0.5 * (number_sum_[x] + number_sum_[y]) * rho(x, y);
        for (const auto& d : dissipators_) {
          const int ux = d.up[x], uy = d.up[y];
          if (ux >= 0 && uy >= 0) acc += std::sqrt((d.occ[x] + 1.0) * (d.occ[y] + 1.0)) * rho(ux, uy);
        }
        out(x, y) = gamma_ * acc;
      }
  }

 private:
  double gamma_;
  std::vector<Dissipator> dissipators_;
  std::vector<double> number_sum_;
};

}  // namespace

DensityOperator lindblad_integrate(const DensityOperator& rho0, const LindbladConfig& cfg) {
  if (cfg.gamma_rate < 0.0 || cfg.t_final < 0.0 || cfg.dt <= 0.0)
    throw std::invalid_argument("lindblad: rate, time and step must be nonnegative (step positive)");
  if (cfg.dt * cfg.gamma_rate > 0.01 + 1e-15)
    throw std::invalid_argument("lindblad: step control violated, dt*Gamma = " + std::to_string(cfg.dt * cfg.gamma_rate));
  for (int s : cfg.damped) {
    if (s < 0 || s >= rho0.subsystem_count()) throw std::out_of_range("lindblad: damped subsystem out of range");
    if (cfg.n_max > 0 && rho0.dims()[s] != cfg.n_max)
      throw std::invalid_argument("lindblad: damped subsystem dimension differs from n_max");
  }
  if (cfg.gamma_rate == 0.0 || cfg.t_final == 0.0) return rho0;

  const Lindbladian generator(rho0.dims(), cfg.damped, cfg.gamma_rate);
  const int steps = static_cast<int>(std::ceil(cfg.t_final / cfg.dt - 1e-12));
  const double h = cfg.t_final / steps;
  const auto n = rho0.matrix().rows();
  ComplexMatrix rho = rho0.matrix();
  ComplexMatrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n);
  const double trace0 = rho.trace().real();
  for (int step = 0; step < steps; ++step) {
    generator.apply(rho, k1);
    tmp = rho + 0.5 * h * k1;
    generator.apply(tmp, k2);
    tmp = rho + 0.5 * h * k2;
    generator.apply(tmp, k3);
    tmp = rho + h * k3;
    generator.apply(tmp, k4);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const double drift = std::abs(rho.trace().real() - trace0);
    if (drift > 1e-6) throw std::runtime_error("lindblad: trace drift " + std::to_string(drift) + " exceeds 1e-6");
  }
  return DensityOperator(rho0.dims(), std::move(rho));
}

}  // namespace ctsim
