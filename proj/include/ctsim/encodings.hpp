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

// Maximal-slice states in the vacuum/single-photon and coherent-state
// encodings, the controller's measurement basis, and cat-state bases.

#include <utility>

#include "ctsim/hilbert.hpp"

namespace ctsim {

/// Angle of the maximal-slice family (|000> + c|111> + d|011>)/sqrt(2),
/// with c = cos(theta) and d = sin(theta).
class MsParams {
 public:
  /// Throws std::invalid_argument outside [0, pi/2].
  explicit MsParams(double theta);

  double theta() const { return theta_; }
  double c() const { return c_; }
  double d() const { return d_; }

 private:
  double theta_;
  double c_;
  double d_;
};

/// Raised when a Fock truncation cannot hold a coherent state to the
/// required tail mass.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(double alpha, int n_max, int required);
  int required_n_max() const { return required_; }

 private:
  int required_;
};

inline constexpr double kTailBound = 1e-12;

/// Poisson tail e^{-a^2} sum_{n >= n_max} a^{2n}/n!.
double coherent_tail_mass(double alpha, int n_max);

/// Smallest dimension meeting kTailBound, starting from ceil(a^2 + 6a + 12).
int truncation_for(double alpha);

/// Coherent-state amplitude (nonnegative, real) and the Fock dimension used
/// whenever states are materialized.
struct CoherentEncoding {
  double alpha = 0.0;
  int n_max = 0;

  /// Uses `truncation_for(alpha)`.
  static CoherentEncoding with_policy(double alpha);
  /// Throws TruncationError if `n_max` violates the tail bound.
  void validate() const;
};

/// |a> truncated to n_max levels and renormalized. `alpha` may be negative
/// (the |-a> member of the encoding). Throws TruncationError.
Ket coherent_ket(double alpha, int n_max);

/// Three qubits (Charlie, Alice, Bob).
Ket ms_state_vsp(const MsParams& params);

/// Squared norm of (|0>|a,a> + c|1>|-a,-a> + d|0>|-a,-a>)/sqrt(2), i.e.
/// 1 + sin(theta) exp(-4a^2).
double ms_coherent_norm_squared(const MsParams& params, double alpha);

/// Hybrid state with dims (2, n_max, n_max): Charlie keeps a two-level
/// system, modes 2 and 3 carry |+-a>.
Ket ms_state_coherent(const MsParams& params, const CoherentEncoding& enc);

struct CharlieBasis {
  Ket plus;
  Ket minus;
};

/// Controller measurement basis. Written in a form that stays finite at
/// c = 0, where it becomes (|0>, -|1>).
CharlieBasis charlie_basis(const MsParams& params);

struct CatBasis {
  double gamma;
  int n_max;
  Ket even;
  Ket odd;
};

/// Even/odd cat states (|g> +- |-g>)/sqrt(2 +- 2e^{-2g^2}). Below g = 1e-4 the
/// Fock limit (|0>, |1>) is returned.
CatBasis cat_basis(double gamma, int n_max);

/// Coffman-Kundu-Wootters three-tangle of a pure three-qubit state.
/// Throws std::invalid_argument for dims other than (2,2,2).
double tangle(const Ket& state);

/// Wootters concurrence of a two-qubit density operator.
double concurrence(const DensityOperator& rho);

}  // namespace ctsim
