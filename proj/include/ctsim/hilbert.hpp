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

// Dense complex linear algebra over labeled tensor-product spaces.

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ctsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Ordered list of subsystem dimensions. Always explicit, never inferred
/// from a matrix size.
using Dims = std::vector<int>;

namespace tol {
inline constexpr double kState = 1e-10;      // Hermiticity, trace, norm.
inline constexpr double kEigen = 1e-8;       // eigensolver residuals.
inline constexpr double kPsd = 1e-9;         // smallest admissible eigenvalue is -kPsd.
inline constexpr double kUnreachable = 1e-14;  // projection probability floor.
}  // namespace tol

/// Thrown when a measurement outcome has (numerically) zero probability.
class OutcomeUnreachable : public std::runtime_error {
 public:
  explicit OutcomeUnreachable(double probability);
  double probability() const { return probability_; }

 private:
  double probability_;
};

int total_dimension(const Dims& dims);

/// Normalized pure state on a tensor-product space.
class Ket {
 public:
  /// Throws std::invalid_argument if the size does not match the dims or the
  /// norm differs from one by more than tol::kState.
  Ket(Dims dims, ComplexVector amplitudes);

  /// Rescales `amplitudes` to unit norm. Throws on a zero vector.
  static Ket normalized(Dims dims, ComplexVector amplitudes);

  /// Computational basis state |index> of a single system of dimension `dim`.
  static Ket basis(int dim, int index);

  const Dims& dims() const { return dims_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  int dimension() const { return static_cast<int>(amplitudes_.size()); }

  Complex inner(const Ket& other) const;  // <this|other>
  Ket tensor(const Ket& other) const;

 private:
  Dims dims_;
  ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite operator with subsystem
/// labels. Construction checks Hermiticity and trace; positivity is checked
/// on demand by `check_positive()` because it costs a full eigensolve.
class DensityOperator {
 public:
  DensityOperator(Dims dims, ComplexMatrix matrix);

  static DensityOperator from_ket(const Ket& ket);

  const Dims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  int dimension() const { return static_cast<int>(matrix_.rows()); }
  int subsystem_count() const { return static_cast<int>(dims_.size()); }

  double trace() const { return matrix_.trace().real(); }
  double smallest_eigenvalue() const;
  double purity() const;

  /// Throws std::domain_error if the smallest eigenvalue is below -tol.
  void check_positive(double tolerance = tol::kPsd) const;

  /// <ket|rho|ket>
  double expectation(const Ket& ket) const;

 private:
  Dims dims_;
  ComplexMatrix matrix_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // column k belongs to values[k]
};

/// Largest elementwise |m - m^dagger|.
double max_asymmetry(const ComplexMatrix& m);

/// Throws std::invalid_argument naming the asymmetry when `m` is not
/// Hermitian within tol::kState.
HermitianEigen eig_hermitian(const ComplexMatrix& m);

/// Reduced state on `keep` (subsystem indices, any order; the result keeps
/// the original subsystem order).
DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<int> keep);

struct Projection {
  DensityOperator state;  // renormalized, on the remaining subsystems
  double probability;
};

/// Projects `subsystem` onto `ket` and traces it out.
/// Throws OutcomeUnreachable when the probability is below tol::kUnreachable.
Projection project(const DensityOperator& rho, int subsystem, const Ket& ket);

/// <ket|_s rho |ket>_s on the remaining subsystems, unnormalized; its trace
/// is the outcome probability. No unreachable-outcome check.
ComplexMatrix project_unnormalized(const DensityOperator& rho, int subsystem, const Ket& ket);

/// Half the trace norm of a - b.
double trace_distance(const DensityOperator& a, const DensityOperator& b);
double trace_norm(const ComplexMatrix& hermitian);

/// Positive square root of a positive semidefinite matrix.
ComplexMatrix sqrtm_psd(const ComplexMatrix& m);

}  // namespace ctsim
