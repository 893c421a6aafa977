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

// Operators written over a small set of non-orthogonal product kets
// |q> (x) |x_1> (x) ... (x) |x_m>, with |q> an optional qubit basis state and
// |x_j> real-amplitude coherent states. Every state reachable from the coherent
// maximal-slice state under loss, partial trace of the qubit and projection of
// the qubit stays in this form, so nothing has to be truncated.

#include <optional>
#include <vector>

#include "ctsim/hilbert.hpp"

namespace ctsim {

struct FrameKet {
  std::optional<int> qubit;  // 0 or 1 if a qubit factor is present
  std::vector<double> modes;  // real coherent amplitudes

  friend bool operator==(const FrameKet&, const FrameKet&) = default;
};

/// <a|b> for real coherent amplitudes.
double coherent_overlap(double a, double b);

/// rho = sum_ab coeffs(a,b) |k_a><k_b|.
class FrameOperator {
 public:
  FrameOperator(std::vector<FrameKet> kets, ComplexMatrix coeffs);

  const std::vector<FrameKet>& kets() const { return kets_; }
  const ComplexMatrix& coeffs() const { return coeffs_; }
  bool has_qubit() const { return kets_.front().qubit.has_value(); }
  int mode_count() const { return static_cast<int>(kets_.front().modes.size()); }

  /// G(a,b) = <k_a|k_b>.
  ComplexMatrix gram() const;
  double trace() const;

  FrameOperator scaled(double s) const;
  FrameOperator trace_qubit() const;
  /// <xi| rho |xi> on the qubit, unnormalized (trace = outcome probability).
  FrameOperator project_qubit(const Ket& xi) const;

  /// Fock-space density operator on (2?, n_max, ..., n_max).
  DensityOperator materialize(int n_max) const;

  /// Two-mode operator with all amplitudes equal to +-g, rewritten in the
  /// orthonormal product basis {|g+>,|g->}^(x)2 of even/odd cat states, with
  /// |g+> as logical 0. Exact; throws if the amplitudes differ in magnitude.
  DensityOperator cat_qubits() const;

 private:
  std::vector<FrameKet> kets_;
  ComplexMatrix coeffs_;
};

/// Coefficients (p, q) with |g> = p|g+> + q|g->, |-g> = p|g+> - q|g->.
struct CatSplit {
  double p;
  double q;
};
CatSplit cat_split(double gamma);

}  // namespace ctsim
