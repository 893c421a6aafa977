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

// Photon loss on the two travelling modes: closed-form maps for both
// encodings and a Runge-Kutta master-equation integrator used as an oracle.

#include <vector>

#include "ctsim/coherent_frame.hpp"
#include "ctsim/encodings.hpp"
#include "ctsim/hilbert.hpp"

namespace ctsim {

/// Normalized loss time r in [0, 1]; tau = sqrt(1 - r^2) is the surviving
/// field amplitude, tau = exp(-Gamma t / 2).
class DampingParams {
 public:
  static DampingParams from_r(double r);
  static DampingParams from_rate_time(double gamma_rate, double t);

  double r() const { return r_; }
  double tau() const { return tau_; }
  double r_sq() const { return r_ * r_; }
  double tau_sq() const { return tau_ * tau_; }

  /// Time needed at `gamma_rate` to reach this r. Infinite at r = 1.
  double time_at_rate(double gamma_rate) const;

 private:
  DampingParams(double r, double tau) : r_(r), tau_(tau) {}
  double r_;
  double tau_;
};

/// Amplitude damping of one Fock mode (subsystem `mode` of `rho`), applied
/// through its Kraus operators K_k = sum_n sqrt(C(n,k)) tau^{n-k} r^k |n-k><n|.
DensityOperator damp_mode(const DensityOperator& rho, int mode, const DampingParams& p);

/// Damps subsystems 1 and 2 of a (2,2,2) VSP state; subsystem 0 is untouched.
DensityOperator damp_vsp(const DensityOperator& rho, const DampingParams& p);

struct DampedDyad {
  double ket_amp;
  double bra_amp;
  double factor;
};

/// |ket_amp><bra_amp| -> factor |tau ket_amp><tau bra_amp| for one mode:
/// factor 1 for equal signs, exp(-2 r^2 a^2) for opposite signs.
DampedDyad damp_coherent_pair(double ket_amp, double bra_amp, const DampingParams& p);

/// Damps every mode of every dyad of a frame operator.
FrameOperator damp_frame(const FrameOperator& rho, const DampingParams& p);

/// Initial hybrid maximal-slice state as a frame operator over the three
/// kets |0>|a,a>, |1>|-a,-a>, |0>|-a,-a>.
FrameOperator ms_frame(const MsParams& params, double alpha);

/// Damped coherent maximal-slice state, kept in the coherent frame.
FrameOperator evolve_ms_coherent_frame(const MsParams& params, double alpha, const DampingParams& p);

/// Same state materialized on (2, n_max, n_max).
DensityOperator evolve_ms_coherent(const MsParams& params, const CoherentEncoding& enc, const DampingParams& p);

struct LindbladConfig {
  double gamma_rate = 1.0;
  double t_final = 0.0;
  double dt = 0.01;
  int n_max = 0;                   // expected dimension of damped modes; 0 skips the check
  std::vector<int> damped = {1, 2};  // subsystems carrying a dissipator
};

/// Classic RK4 on d rho/dt = Gamma sum_i (a_i rho a_i^+ - {a_i^+ a_i, rho}/2).
/// Throws std::invalid_argument if dt * Gamma > 0.01 and std::runtime_error
/// if the trace drifts by more than 1e-6.
DensityOperator lindblad_integrate(const DensityOperator& rho0, const LindbladConfig& cfg);

}  // namespace ctsim
