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

// Teleportation figures of merit: fully entangled fraction, the conditioned
// and non-conditioned fidelities of the controlled protocol, control power
// and efficiency.

#include <array>
#include <cstdint>

#include "ctsim/channel.hpp"
#include "ctsim/encodings.hpp"
#include "ctsim/hilbert.hpp"

namespace ctsim {

/// Four orthonormal maximally entangled kets in which every maximally
/// entangled state has real coefficients up to a global phase.
struct MagicBasis {
  std::array<Ket, 4> kets;

  /// |Phi+>, i|Phi->, i|Psi+>, |Psi-> on (2,2).
  static MagicBasis standard();
};

/// Magic basis built from even/odd cat states on (n_max, n_max). Only used
/// to cross-check the four-dimensional cat-frame route in Fock space.
struct CatMagicBasis {
  double gamma;
  std::array<Ket, 4> kets;

  static CatMagicBasis build(double gamma, int n_max);
};

/// Largest eigenvalue of Re(M), M_jk = <m_j|rho|m_k>.
double fully_entangled_fraction(const DensityOperator& rho, const MagicBasis& basis = MagicBasis::standard());

/// Same quantity for a two-mode Fock-space state against the cat magic basis.
double fully_entangled_fraction(const DensityOperator& rho, const CatMagicBasis& basis);

struct FefOracleOptions {
  int starts = 12;
  std::uint64_t seed = 20170101;
};

/// Brute-force max of <phi|rho|phi> over phi = (U (x) V)|Phi+>, U and V in
/// SU(2) with three Euler angles each, by multi-start simplex search.
double fef_oracle(const DensityOperator& rho, const FefOracleOptions& options = {});

/// (2f + 1)/3.
double teleport_fidelity(double f);

/// 1 - 3(F_nc - 2/3) above the classical bound, 1 at or below it.
double control_power(double f_nc);

/// C_p (1 + 3(F_c - 1)) above the classical bound, 0 at or below it.
double efficiency(double control_power, double f_c);

struct CtFigures {
  double f_c = 0.0;
  double f_nc = 0.0;
  double c_p = 0.0;
  double eta = 0.0;
  // Per-outcome detail of the controller's measurement.
  double p_plus = 0.0;
  double p_minus = 0.0;
  double f_c_plus = 0.0;
  double f_c_minus = 0.0;
};

/// Builds the damped three-qubit state, traces or measures the controller
/// and evaluates every figure numerically.
CtFigures ct_pipeline_vsp(const MsParams& params, const DampingParams& p);

struct VspClosedForm {
  double f_nc;
  double f_c;
};

VspClosedForm closed_form_vsp(const MsParams& params, const DampingParams& p);

/// Coherent encoding, evaluated exactly in the coherent frame and then in the
/// even/odd cat product basis.
CtFigures ct_pipeline_coherent(const MsParams& params, double alpha, const DampingParams& p);

/// Convenience overload taking an encoding (only alpha is used; the frame
/// route never truncates).
inline CtFigures ct_pipeline_coherent(const MsParams& params, const CoherentEncoding& enc, const DampingParams& p) {
  return ct_pipeline_coherent(params, enc.alpha, p);
}

/// Outcome probabilities of the controller's measurement in closed form.
struct OutcomeProbabilities {
  double plus;
  double minus;
};
OutcomeProbabilities vsp_outcome_probabilities(const MsParams& params);
OutcomeProbabilities coherent_outcome_probabilities(const MsParams& params, double alpha);

}  // namespace ctsim
