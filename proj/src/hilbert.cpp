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

#include "ctsim/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace ctsim {
namespace {

std::string describe_dims(const Dims& dims) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ")";
  return os.str();
}

// Row-major strides: the last subsystem varies fastest.
std::vector<int> strides_of(const Dims& dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) strides[i] = strides[i + 1] * dims[i + 1];
  return strides;
}

// Splits the full index space into (outer, inner) where `inner` enumerates the
// subsystems flagged in `selected` and `outer` the rest, both in original
// order. table[outer * inner_dim + inner] is the full index.
struct IndexSplit {
  int outer_dim = 1;
  int inner_dim = 1;
  std::vector<int> table;
};

IndexSplit split_indices(const Dims& dims, const std::vector<bool>& selected) {
  IndexSplit split;
  Dims outer_dims, inner_dims;
  std::vector<int> outer_strides, inner_strides;
  const auto strides = strides_of(dims);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (selected[i]) {
      inner_dims.push_back(dims[i]);
      inner_strides.push_back(strides[i]);
    } else {
      outer_dims.push_back(dims[i]);
      outer_strides.push_back(strides[i]);
    }
  }
  split.outer_dim = total_dimension(outer_dims);
  split.inner_dim = total_dimension(inner_dims);

  auto offsets = [](const Dims& d, const std::vector<int>& s) {
    std::vector<int> out(total_dimension(d), 0);
    std::vector<int> digit(d.size(), 0);
    for (int k = 0; k < static_cast<int>(out.size()); ++k) {
      int off = 0;
      for (std::size_t j = 0; j < d.size(); ++j) off += digit[j] * s[j];
      out[k] = off;
      for (int j = static_cast<int>(d.size()) - 1; j >= 0; --j) {
        if (++digit[j] < d[j]) break;
        digit[j] = 0;
      }
    }
    return out;
  };
  const auto outer_off = offsets(outer_dims, outer_strides);
  const auto inner_off = offsets(inner_dims, inner_strides);
  split.table.resize(static_cast<std::size_t>(split.outer_dim) * split.inner_dim);
  for (int o = 0; o < split.outer_dim; ++o)
    for (int i = 0; i < split.inner_dim; ++i) split.table[o * split.inner_dim + i] = outer_off[o] + inner_off[i];
  return split;
}

}  // namespace

OutcomeUnreachable::OutcomeUnreachable(double probability)
    : std::runtime_error("outcome unreachable: probability " + std::to_string(probability)),
      probability_(probability) {}

int total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(Dims dims, ComplexVector amplitudes) : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (dims_.empty() || std::any_of(dims_.begin(), dims_.end(), [](int d) { return d < 1; }))
    throw std::invalid_argument("ket dims must be positive, got " + describe_dims(dims_));
  if (total_dimension(dims_) != amplitudes_.size())
    throw std::invalid_argument("ket size " + std::to_string(amplitudes_.size()) + " does not match dims " +
                                describe_dims(dims_));
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::kState)
    throw std::invalid_argument("ket not normalized: norm " + std::to_string(norm));
}

Ket Ket::normalized(Dims dims, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return Ket(std::move(dims), amplitudes / norm);
}

Ket Ket::basis(int dim, int index) {
  if (index < 0 || index >= dim) throw std::out_of_range("basis index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v[index] = 1.0;
  return Ket({dim}, std::move(v));
}

Complex Ket::inner(const Ket& other) const {
  if (dims_ != other.dims_) throw std::invalid_argument("inner product of kets with different dims");
  return amplitudes_.dot(other.amplitudes_);  // Eigen's dot conjugates the left operand
}

Ket Ket::tensor(const Ket& other) const {
  Dims dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  ComplexVector v(amplitudes_.size() * other.amplitudes_.size());
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i)
    v.segment(i * other.amplitudes_.size(), other.amplitudes_.size()) = amplitudes_[i] * other.amplitudes_;
  return Ket(std::move(dims), std::move(v));
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(Dims dims, ComplexMatrix matrix) : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  if (dims_.empty() || std::any_of(dims_.begin(), dims_.end(), [](int d) { return d < 1; }))
    throw std::invalid_argument("density operator dims must be positive, got " + describe_dims(dims_));
  const int n = total_dimension(dims_);
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw std::invalid_argument("density matrix shape does not match dims " + describe_dims(dims_));
  const double asym = max_asymmetry(matrix_);
  if (asym > tol::kState) throw std::invalid_argument("density matrix not Hermitian: max asymmetry " + std::to_string(asym));
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > tol::kState) throw std::invalid_argument("density matrix trace " + std::to_string(tr) + " != 1");
}

DensityOperator DensityOperator::from_ket(const Ket& ket) {
  const auto& v = ket.amplitudes();
  return DensityOperator(ket.dims(), v * v.adjoint());
}

double DensityOperator::smallest_eigenvalue() const { return eig_hermitian(matrix_).values[0]; }

double DensityOperator::purity() const { return (matrix_ * matrix_).trace().real(); }

void DensityOperator::check_positive(double tolerance) const {
  const double lo = smallest_eigenvalue();
  if (lo < -tolerance) throw std::domain_error("density matrix not positive: smallest eigenvalue " + std::to_string(lo));
}

double DensityOperator::expectation(const Ket& ket) const {
  if (ket.dims() != dims_) throw std::invalid_argument("expectation: ket dims do not match");
  return ket.amplitudes().dot(matrix_ * ket.amplitudes()).real();
}

// ---------------------------------------------------------------------------
// Free functions

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_asymmetry(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_hermitian: matrix is not square");
  const double asym = max_asymmetry(m);
  if (asym > tol::kState)
    throw std::invalid_argument("eig_hermitian: matrix not Hermitian, max asymmetry " + std::to_string(asym));
  // Symmetrize so the solver sees exactly Hermitian input.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep) {
  const int n = rho.subsystem_count();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<bool> traced(n, true);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::out_of_range("partial_trace: subsystem index " + std::to_string(k) + " out of range");
    traced[k] = false;
  }
  Dims kept_dims;
  for (int i = 0; i < n; ++i)
    if (!traced[i]) kept_dims.push_back(rho.dims()[i]);

  const IndexSplit split = split_indices(rho.dims(), traced);
  const auto& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(split.outer_dim, split.outer_dim);
  for (int a = 0; a < split.outer_dim; ++a)
    for (int b = 0; b < split.outer_dim; ++b) {
      Complex acc = 0.0;
      for (int t = 0; t < split.inner_dim; ++t)
        acc += m(split.table[a * split.inner_dim + t], split.table[b * split.inner_dim + t]);
      out(a, b) = acc;
    }
  return DensityOperator(std::move(kept_dims), std::move(out));
}

DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

ComplexMatrix project_unnormalized(const DensityOperator& rho, int subsystem, const Ket& ket) {
  const int n = rho.subsystem_count();
  if (subsystem < 0 || subsystem >= n) throw std::out_of_range("project: subsystem index out of range");
  if (n < 2) throw std::invalid_argument("project: need at least two subsystems");
  if (ket.dims().size() != 1 || ket.dimension() != rho.dims()[subsystem])
    throw std::invalid_argument("project: ket dimension does not match subsystem " + std::to_string(subsystem));

  std::vector<bool> selected(n, false);
  selected[subsystem] = true;
  const IndexSplit split = split_indices(rho.dims(), selected);
  const auto& m = rho.matrix();
  const auto& v = ket.amplitudes();
  ComplexMatrix out = ComplexMatrix::Zero(split.outer_dim, split.outer_dim);
  for (int a = 0; a < split.outer_dim; ++a)
    for (int b = 0; b < split.outer_dim; ++b) {
      Complex acc = 0.0;
      for (int i = 0; i < split.inner_dim; ++i) {
        if (v[i] == 0.0) continue;
        const int row = split.table[a * split.inner_dim + i];
        for (int j = 0; j < split.inner_dim; ++j)
          acc += std::conj(v[i]) * m(row, split.table[b * split.inner_dim + j]) * v[j];
      }
      out(a, b) = acc;
    }
  return out;
}

Projection project(const DensityOperator& rho, int subsystem, const Ket& ket) {
  ComplexMatrix sub = project_unnormalized(rho, subsystem, ket);
  const double p = sub.trace().real();
  if (p < tol::kUnreachable) throw OutcomeUnreachable(p);
  Dims rest = rho.dims();
  rest.erase(rest.begin() + subsystem);
  sub /= p;
  sub = 0.5 * (sub + sub.adjoint()).eval();
  return {DensityOperator(std::move(rest), std::move(sub)), std::min(1.0, p)};
}

double trace_norm(const ComplexMatrix& hermitian) {
  return eig_hermitian(hermitian).values.cwiseAbs().sum();
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("trace_distance: dims differ");
  return 0.5 * trace_norm(a.matrix() - b.matrix());
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& m) {
  const HermitianEigen e = eig_hermitian(m);
  const RealVector root = e.values.cwiseMax(0.0).cwiseSqrt();
  return e.vectors * root.asDiagonal() * e.vectors.adjoint();
}

}  // namespace ctsim
