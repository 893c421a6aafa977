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

#include "ctsim/coherent_frame.hpp"

#include <cmath>

#include "ctsim/encodings.hpp"

namespace ctsim {

double coherent_overlap(double a, double b) { return std::exp(-0.5 * (a - b) * (a - b)); }

CatSplit cat_split(double gamma) {
  const double x = 2.0 * gamma * gamma;
  return {std::sqrt(0.5 * (1.0 + std::exp(-x))), std::sqrt(-0.5 * std::expm1(-x))};
}

FrameOperator::FrameOperator(std::vector<FrameKet> kets, ComplexMatrix coeffs)
    : kets_(std::move(kets)), coeffs_(std::move(coeffs)) {
  if (kets_.empty()) throw std::invalid_argument("frame operator needs at least one ket");
  const auto k = static_cast<Eigen::Index>(kets_.size());
  if (coeffs_.rows() != k || coeffs_.cols() != k) throw std::invalid_argument("frame coefficient shape mismatch");
  for (const auto& ket : kets_) {
    if (ket.qubit.has_value() != kets_.front().qubit.has_value() || ket.modes.size() != kets_.front().modes.size())
      throw std::invalid_argument("frame kets must share one layout");
    if (ket.qubit && (*ket.qubit < 0 || *ket.qubit > 1)) throw std::invalid_argument("frame qubit label must be 0 or 1");
  }
}

ComplexMatrix FrameOperator::gram() const {
  const auto k = static_cast<Eigen::Index>(kets_.size());
  ComplexMatrix g(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) {
      double v = (kets_[a].qubit == kets_[b].qubit) ? 1.0 : 0.0;
      for (std::size_t m = 0; m < kets_[a].modes.size() && v != 0.0; ++m)
        v *= coherent_overlap(kets_[a].modes[m], kets_[b].modes[m]);
      g(a, b) = v;
    }
  return g;
}

double FrameOperator::trace() const {
  // Tr sum c_ab |a><b| = sum c_ab <b|a>
  return (coeffs_.cwiseProduct(gram().transpose())).sum().real();
}

FrameOperator FrameOperator::scaled(double s) const { return FrameOperator(kets_, s * coeffs_); }

FrameOperator FrameOperator::trace_qubit() const {
  if (!has_qubit()) throw std::logic_error("trace_qubit: no qubit factor");
  std::vector<FrameKet> kets;
  kets.reserve(kets_.size());
  for (const auto& k : kets_) kets.push_back({std::nullopt, k.modes});
  ComplexMatrix c = coeffs_;
  for (std::size_t a = 0; a < kets_.size(); ++a)
    for (std::size_t b = 0; b < kets_.size(); ++b)
      if (kets_[a].qubit != kets_[b].qubit) c(a, b) = 0.0;
  return FrameOperator(std::move(kets), std::move(c));
}

FrameOperator FrameOperator::project_qubit(const Ket& xi) const {
  if (!has_qubit()) throw std::logic_error("project_qubit: no qubit factor");
  if (xi.dimension() != 2) throw std::invalid_argument("project_qubit: ket must be two-dimensional");
  std::vector<FrameKet> kets;
  kets.reserve(kets_.size());
  for (const auto& k : kets_) kets.push_back({std::nullopt, k.modes});
  ComplexMatrix c = coeffs_;
  const auto& v = xi.amplitudes();
  for (std::size_t a = 0; a < kets_.size(); ++a)
    for (std::size_t b = 0; b < kets_.size(); ++b)
      c(a, b) = std::conj(v[*kets_[a].qubit]) * coeffs_(a, b) * v[*kets_[b].qubit];
  return FrameOperator(std::move(kets), std::move(c));
}

DensityOperator FrameOperator::materialize(int n_max) const {
  Dims dims;
  if (has_qubit()) dims.push_back(2);
  for (int m = 0; m < mode_count(); ++m) dims.push_back(n_max);
  const int total = total_dimension(dims);
  ComplexMatrix vecs(total, static_cast<Eigen::Index>(kets_.size()));
  for (std::size_t a = 0; a < kets_.size(); ++a) {
    ComplexVector v = ComplexVector::Ones(1);
    if (has_qubit()) v = Ket::basis(2, *kets_[a].qubit).amplitudes();
    for (double x : kets_[a].modes) {
      const ComplexVector mode = coherent_ket(x, n_max).amplitudes();
      ComplexVector next(v.size() * mode.size());
      for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * mode.size(), mode.size()) = v[i] * mode;
      v = std::move(next);
    }
    vecs.col(a) = v;
  }
  ComplexMatrix m = vecs * coeffs_ * vecs.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator(std::move(dims), std::move(m));
}

DensityOperator FrameOperator::cat_qubits() const {
  if (has_qubit() || mode_count() != 2) throw std::logic_error("cat_qubits: need a two-mode operator without qubit");
  const double gamma = std::abs(kets_.front().modes[0]);
  for (const auto& k : kets_)
    for (double x : k.modes)
      if (std::abs(std::abs(x) - gamma) > 1e-12) throw std::invalid_argument("cat_qubits: amplitudes differ in magnitude");
  const CatSplit s = cat_split(gamma);
  ComplexMatrix vecs(4, static_cast<Eigen::Index>(kets_.size()));
  for (std::size_t a = 0; a < kets_.size(); ++a) {
    const double q0 = kets_[a].modes[0] < 0 ? -s.q : s.q;
    const double q1 = kets_[a].modes[1] < 0 ? -s.q : s.q;
    vecs(0, a) = s.p * s.p;
    vecs(1, a) = s.p * q1;
    vecs(2, a) = q0 * s.p;
    vecs(3, a) = q0 * q1;
  }
  ComplexMatrix m = vecs * coeffs_ * vecs.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator({2, 2}, std::move(m));
}

}  // namespace ctsim
