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

// Bell-Svetlichny function for the controller/sender/receiver state and its
// maximization over the two local settings of every party.
//
// Subsystem order is (Charlie, Alice, Bob). Charlie always measures a rotated
// sigma_z. Alice and Bob measure rotated sigma_z on VSP qubits and displaced
// parity on coherent-state modes.

#include <array>
#include <cstdint>

#include "ctsim/coherent_frame.hpp"
#include "ctsim/hilbert.hpp"

namespace ctsim {

enum class Encoding { kVsp, kCoherent };

const char* to_string(Encoding e);

/// Rotation angles of a dichotomic qubit observable; zeta = -omega e^{-i delta}/2.
struct QubitSetting {
  double omega = 0.0;
  double delta = 0.0;

  Complex zeta() const;
  /// Bloch vector (sin w cos d, sin w sin d, cos w) of the observable.
  std::array<double, 3> bloch() const;
};

/// Displacement of a parity measurement on one mode.
struct ModeSetting {
  Complex beta = 0.0;
};

/// R(zeta) sigma_z R(zeta)^dagger.
ComplexMatrix rotated_sigma_z(const QubitSetting& s);

/// Largest displacement trusted on an n_max-level truncation: sqrt(n_max)/3.
double displacement_bound(int n_max);

/// D(beta) P D(beta)^dagger on n_max Fock levels, P the photon-number parity.
/// The exponential is taken on a padded space and cropped, so the low-lying
/// block is accurate. Throws std::invalid_argument past displacement_bound.
ComplexMatrix displaced_parity(const ModeSetting& s, int n_max);

/// <a|D(beta) P D(beta)^dagger|b> for coherent states |a>, |b>.
Complex displaced_parity_element(Complex bra, Complex ket, Complex beta);

/// Twelve real parameters: for each of Charlie, Alice and Bob the unprimed
/// setting then the primed one, two numbers each. Qubit settings are
/// (omega, delta); mode settings are (Re beta, Im beta).
class SvetlichnySettings {
 public:
  SvetlichnySettings(Encoding encoding, const std::array<double, 12>& params);

  Encoding encoding() const { return encoding_; }
  const std::array<double, 12>& params() const { return params_; }

  QubitSetting charlie(int primed) const;
  QubitSetting alice_qubit(int primed) const;
  QubitSetting bob_qubit(int primed) const;
  ModeSetting alice_mode(int primed) const;
  ModeSetting bob_mode(int primed) const;

  /// Folds omega into [0, pi] (flipping delta by pi, which leaves the
  /// observable unchanged), wraps delta into [0, 2 pi), and reflects each
  /// displacement component into [-beta_max, beta_max].
  SvetlichnySettings canonical(double beta_max) const;

 private:
  Encoding encoding_;
  std::array<double, 12> params_;
};

/// Sign of E(A^a, B^b, C^c) in the Svetlichny sum: + with at most one primed
/// setting, - otherwise.
int svetlichny_sign(int alice_primed, int bob_primed, int charlie_primed);

/// sum of signed correlators Tr(rho C (x) A (x) B). `rho` has dims (2,2,2)
/// for VSP or (2, n, n) for coherent modes in Fock space.
double svetlichny_value(const DensityOperator& rho, const SvetlichnySettings& settings);

/// Same function evaluated exactly on a coherent-frame state with a qubit.
double svetlichny_value(const FrameOperator& rho, const SvetlichnySettings& settings);

/// T_ijk = Tr(rho sigma_i (x) sigma_j (x) sigma_k), i,j,k over x,y,z.
std::array<double, 27> correlation_tensor(const DensityOperator& rho);

struct MaximizeOptions {
  int n_starts = 64;
  double tolerance = 1e-8;
  std::uint64_t seed = 7;
  double beta_max = 0.0;  // half-width of the square displacement box; 0 picks a default
  int max_evaluations = 20000;
};

struct SvetlichnyMax {
  double s_max;  // |S_v| at `best`
  SvetlichnySettings best;
  int evaluations;
  double peak;  // largest |S_v| seen at any evaluation
};

/// Multi-start simplex search of max |S_v|. Each start draws its settings
/// uniformly from the parameter box with its own seeded stream, so the result
/// does not depend on scheduling.
SvetlichnyMax maximize_svetlichny(const DensityOperator& rho, Encoding encoding, const MaximizeOptions& options = {});

/// Coherent encoding in the exact frame; beta_max defaults to 2(gamma + 1).
SvetlichnyMax maximize_svetlichny(const FrameOperator& rho, const MaximizeOptions& options = {});

inline constexpr double kSvetlichnyClassical = 4.0;
inline constexpr double kSvetlichnyQuantum = 5.656854249492380195;  // 4 sqrt 2

}  // namespace ctsim
