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

#include "ctsim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "ctsim/channel.hpp"
#include "ctsim/encodings.hpp"
#include "ctsim/nonlocality.hpp"
#include "ctsim/teleport.hpp"

namespace ctsim {
namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

// Ginibre-distributed mixed state on `dims`.
DensityOperator random_state(const Dims& dims, std::mt19937_64& rng) {
  const int n = total_dimension(dims);
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(dims, 0.5 * (rho + rho.adjoint()));
}

struct Outcome {
  double worst;
  double bound;
};

// Closed-form VSP fidelities against the numeric pipeline on a grid.
Outcome vsp_closed_form() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const MsParams params(kPi / 2 * i / 19.0);
      const auto damping = DampingParams::from_r(j / 19.0);
      const auto numeric = ct_pipeline_vsp(params, damping);
      const auto closed = closed_form_vsp(params, damping);
      worst = std::max({worst, std::abs(numeric.f_c - closed.f_c), std::abs(numeric.f_nc - closed.f_nc)});
    }
  return {worst, 1e-9};
}

Outcome vsp_lindblad() {
  double worst = 0.0;
  for (double theta : {0.0, kPi / 4, kPi / 3})
    for (double r : {0.2, 0.5, 0.8}) {
      const auto rho0 = DensityOperator::from_ket(ms_state_vsp(MsParams(theta)));
      const auto damping = DampingParams::from_r(r);
      LindbladConfig cfg;
      cfg.t_final = damping.time_at_rate(1.0);
      cfg.dt = 0.001;
      worst = std::max(worst, trace_distance(lindblad_integrate(rho0, cfg), damp_vsp(rho0, damping)));
    }
  return {worst, 1e-6};
}

Outcome coherent_lindblad() {
  double worst = 0.0;
  for (double alpha : {0.5, 1.25})
    for (double r : {0.3, 0.6}) {
      const MsParams params(kPi / 4);
      const auto enc = CoherentEncoding::with_policy(alpha);
      const auto rho0 = DensityOperator::from_ket(ms_state_coherent(params, enc));
      const auto damping = DampingParams::from_r(r);
      LindbladConfig cfg;
      cfg.t_final = damping.time_at_rate(1.0);
      cfg.dt = 0.01;
      cfg.n_max = enc.n_max;
      worst = std::max(worst, trace_distance(lindblad_integrate(rho0, cfg), evolve_ms_coherent(params, enc, damping)));
    }
  return {worst, 1e-5};
}

Outcome fef_against_oracle() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int k = 0; k < 40; ++k) {
    const auto rho = random_state({2, 2}, rng);
    worst = std::max(worst, std::abs(fully_entangled_fraction(rho) - fef_oracle(rho)));
  }
  return {worst, 1e-6};
}

// Cat-qubit route against the cat magic basis in Fock space.
Outcome coherent_frame_against_fock() {
  double worst = 0.0;
  for (double alpha : {0.5, 1.25})
    for (double r : {0.0, 0.4}) {
      const MsParams params(kPi / 6);
      const auto damping = DampingParams::from_r(r);
      const auto enc = CoherentEncoding::with_policy(alpha);
      const FrameOperator nc = evolve_ms_coherent_frame(params, alpha, damping).trace_qubit();
      const double gamma = alpha * damping.tau();
      const double f_frame = fully_entangled_fraction(nc.cat_qubits());
      const double f_fock = fully_entangled_fraction(nc.materialize(enc.n_max), CatMagicBasis::build(gamma, enc.n_max));
      worst = std::max(worst, std::abs(f_frame - f_fock));
    }
  return {worst, 1e-8};
}

Outcome svetlichny_frame_against_fock() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  const double alpha = 0.8;
  const auto enc = CoherentEncoding::with_policy(alpha);
  const double bound = displacement_bound(enc.n_max);
  const auto frame = evolve_ms_coherent_frame(MsParams(kPi / 4), alpha, DampingParams::from_r(0.3));
  const auto fock = frame.materialize(enc.n_max);
  for (int k = 0; k < 10; ++k) {
    std::array<double, 12> p{};
    for (int i = 0; i < 12; ++i) p[i] = (i < 4 ? kPi : 0.6 * bound) * u(rng);
    const SvetlichnySettings s(Encoding::kCoherent, p);
    worst = std::max(worst, std::abs(svetlichny_value(frame, s) - svetlichny_value(fock, s)));
  }
  return {worst, 1e-8};
}

Outcome ghz_svetlichny() {
  const auto rho = DensityOperator::from_ket(ms_state_vsp(MsParams(0.0)));
  return {std::abs(maximize_svetlichny(rho, Encoding::kVsp).s_max - kSvetlichnyQuantum), 1e-4};
}

Outcome tangle_law() {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double theta = kPi / 2 * k / 19.0;
    worst = std::max(worst, std::abs(tangle(ms_state_vsp(MsParams(theta))) - std::cos(theta) * std::cos(theta)));
  }
  return {worst, 1e-8};
}

Outcome control_power_flat() {
  double worst = 0.0;
  for (int j = 0; j <= 20; ++j) {
    const auto damping = DampingParams::from_r(j / 20.0);
    worst = std::max(worst, std::abs(ct_pipeline_vsp(MsParams(0.0), damping).c_p - 1.0));
    for (double alpha : {0.2, 0.5, 1.25, 2.5})
      worst = std::max(worst, std::abs(ct_pipeline_coherent(MsParams(0.0), alpha, damping).c_p - 1.0));
  }
  return {worst, 1e-9};
}

struct Named {
  const char* name;
  Outcome (*run)();
};

constexpr Named kChecks[] = {
    {"vsp pipeline matches closed-form fidelities", vsp_closed_form},
    {"vsp damping map matches master-equation integration", vsp_lindblad},
    {"coherent damping map matches master-equation integration", coherent_lindblad},
    {"magic-basis fully entangled fraction matches brute force", fef_against_oracle},
    {"coherent frame fidelity matches Fock-space cat basis", coherent_frame_against_fock},
    {"coherent frame Svetlichny value matches Fock-space operators", svetlichny_frame_against_fock},
    {"GHZ Svetlichny maximum is 4 sqrt 2", ghz_svetlichny},
    {"maximal-slice tangle is cos^2 theta", tangle_law},
    {"GHZ control power stays 1 under loss", control_power_flat},
};

}  // namespace

std::vector<CheckResult> run_verification(const std::function<void(const CheckResult&)>& report) {
  std::vector<CheckResult> results;
  for (const auto& check : kChecks) {
    CheckResult res;
    res.name = check.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome out = check.run();
      res.passed = out.worst <= out.bound;
      res.detail = "max deviation " + sci(out.worst) + " (bound " + sci(out.bound) + ")";
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(res);
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace ctsim
