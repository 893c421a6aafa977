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

#include "ctsim/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "ctsim/simplex.hpp"

namespace ctsim {
namespace {

constexpr double kClassicalBound = 2.0 / 3.0;

Ket two_qubit(Complex a00, Complex a01, Complex a10, Complex a11) {
  ComplexVector v(4);
  v << a00, a01, a10, a11;
  return Ket({2, 2}, std::move(v));
}

double largest_real_part_eigenvalue(const ComplexMatrix& m) {
  const RealMatrix re = 0.5 * (m.real() + m.real().transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(re, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

// Rz(a) Ry(b) Rz(c)
Eigen::Matrix2cd su2(double a, double b, double c) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd rz_a, ry_b, rz_c;
  rz_a << std::exp(-0.5 * i * a), 0.0, 0.0, std::exp(0.5 * i * a);
  ry_b << std::cos(0.5 * b), -std::sin(0.5 * b), std::sin(0.5 * b), std::cos(0.5 * b);
  rz_c << std::exp(-0.5 * i * c), 0.0, 0.0, std::exp(0.5 * i * c);
  return rz_a * ry_b * rz_c;
}

// Fidelity of one conditioned branch; branches with zero weight contribute nothing.
struct Branch {
  double probability = 0.0;
  double fidelity = 0.0;
};

}  // namespace

MagicBasis MagicBasis::standard() {
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, s);
  return {{two_qubit(s, 0.0, 0.0, s), two_qubit(i, 0.0, 0.0, -i), two_qubit(0.0, i, i, 0.0),
           two_qubit(0.0, s, -s, 0.0)}};
}

CatMagicBasis CatMagicBasis::build(double gamma, int n_max) {
  const CatBasis cats = cat_basis(gamma, n_max);
  const Ket pp = cats.even.tensor(cats.even);
  const Ket pm = cats.even.tensor(cats.odd);
  const Ket mp = cats.odd.tensor(cats.even);
  const Ket mm = cats.odd.tensor(cats.odd);
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, s);
  const Dims dims{n_max, n_max};
  return {gamma,
          {Ket::normalized(dims, s * (pp.amplitudes() + mm.amplitudes())),
           Ket::normalized(dims, i * (pp.amplitudes() - mm.amplitudes())),
           Ket::normalized(dims, i * (pm.amplitudes() + mp.amplitudes())),
           Ket::normalized(dims, s * (pm.amplitudes() - mp.amplitudes()))}};
}

double fully_entangled_fraction(const DensityOperator& rho, const MagicBasis& basis) {
  if (rho.dims() != Dims{2, 2}) throw std::invalid_argument("fully_entangled_fraction needs a two-qubit state");
  ComplexMatrix b(4, 4);
  for (int k = 0; k < 4; ++k) b.col(k) = basis.kets[k].amplitudes();
  return largest_real_part_eigenvalue(b.adjoint() * rho.matrix() * b);
}

double fully_entangled_fraction(const DensityOperator& rho, const CatMagicBasis& basis) {
  if (rho.dims() != basis.kets[0].dims()) throw std::invalid_argument("cat magic basis dims do not match the state");
  ComplexMatrix b(rho.dimension(), 4);
  for (int k = 0; k < 4; ++k) b.col(k) = basis.kets[k].amplitudes();
  return largest_real_part_eigenvalue(b.adjoint() * rho.matrix() * b);
}

double fef_oracle(const DensityOperator& rho, const FefOracleOptions& options) {
  if (rho.dims() != Dims{2, 2}) throw std::invalid_argument("fef_oracle needs a two-qubit state");
  const double s = 1.0 / std::numbers::sqrt2;
  const Eigen::Vector4cd phi_plus(s, 0.0, 0.0, s);
  const Eigen::Matrix4cd m = rho.matrix();

  auto overlap = [&](std::span<const double> x) {
    const Eigen::Matrix2cd u = su2(x[0], x[1], x[2]);
    const Eigen::Matrix2cd v = su2(x[3], x[4], x[5]);
    Eigen::Matrix4cd uv;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) uv.block<2, 2>(2 * i, 2 * j) = u(i, j) * v;
    const Eigen::Vector4cd phi = uv * phi_plus;
    return phi.dot(m * phi).real();
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  SimplexOptions simplex;
  simplex.initial_step = 0.7;
  simplex.f_tolerance = 1e-15;
  simplex.x_tolerance = 1e-12;
  simplex.restarts = 4;
  double best = -1.0;
  for (int k = 0; k < options.starts; ++k) {
    std::vector<double> x0(6);
    for (double& v : x0) v = angle(rng);
    const SimplexResult r = nelder_mead([&](std::span<const double> x) { return -overlap(x); }, x0, simplex);
    best = std::max(best, -r.value);
  }
  return best;
}

double teleport_fidelity(double f) { return (2.0 * f + 1.0) / 3.0; }

double control_power(double f_nc) { return f_nc <= kClassicalBound ? 1.0 : 1.0 - 3.0 * (f_nc - kClassicalBound); }

double efficiency(double c_p, double f_c) { return f_c <= kClassicalBound ? 0.0 : c_p * (1.0 + 3.0 * (f_c - 1.0)); }

CtFigures ct_pipeline_vsp(const MsParams& params, const DampingParams& p) {
  const DensityOperator rho = damp_vsp(DensityOperator::from_ket(ms_state_vsp(params)), p);
  CtFigures out;
  out.f_nc = teleport_fidelity(fully_entangled_fraction(partial_trace(rho, {1, 2})));

  const CharlieBasis basis = charlie_basis(params);
  auto branch = [&](const Ket& xi) {
    ComplexMatrix sub = project_unnormalized(rho, 0, xi);
    Branch b;
    b.probability = sub.trace().real();
    if (b.probability < tol::kUnreachable) return Branch{0.0, 0.0};
    sub = 0.5 * (sub + sub.adjoint()).eval() / b.probability;
    b.fidelity = teleport_fidelity(fully_entangled_fraction(DensityOperator({2, 2}, std::move(sub))));
    return b;
  };
  const Branch plus = branch(basis.plus);
  const Branch minus = branch(basis.minus);
  out.p_plus = plus.probability;
  out.p_minus = minus.probability;
  out.f_c_plus = plus.fidelity;
  out.f_c_minus = minus.fidelity;
  out.f_c = plus.probability * plus.fidelity + minus.probability * minus.fidelity;
  out.c_p = control_power(out.f_nc);
  out.eta = efficiency(out.c_p, out.f_c);
  return out;
}

VspClosedForm closed_form_vsp(const MsParams& params, const DampingParams& p) {
  const double r2 = p.r_sq();
  const double quartic = std::abs(1.0 - 2.0 * r2 + 2.0 * r2 * r2);
  const double damping = std::abs(r2 - 1.0);
  return {(3.0 + 2.0 * params.d() * damping + quartic) / 6.0, (3.0 + 2.0 * damping + quartic) / 6.0};
}

CtFigures ct_pipeline_coherent(const MsParams& params, double alpha, const DampingParams& p) {
  const FrameOperator rho = evolve_ms_coherent_frame(params, alpha, p);
  CtFigures out;
  out.f_nc = teleport_fidelity(fully_entangled_fraction(rho.trace_qubit().cat_qubits()));

  const CharlieBasis basis = charlie_basis(params);
  auto branch = [&](const Ket& xi) {
    const FrameOperator sub = rho.project_qubit(xi);
    Branch b;
    b.probability = sub.trace();
    if (b.probability < tol::kUnreachable) return Branch{0.0, 0.0};
    b.fidelity = teleport_fidelity(fully_entangled_fraction(sub.scaled(1.0 / b.probability).cat_qubits()));
    return b;
  };
  const Branch plus = branch(basis.plus);
  const Branch minus = branch(basis.minus);
  out.p_plus = plus.probability;
  out.p_minus = minus.probability;
  out.f_c_plus = plus.fidelity;
  out.f_c_minus = minus.fidelity;
  out.f_c = plus.probability * plus.fidelity + minus.probability * minus.fidelity;
  out.c_p = control_power(out.f_nc);
  out.eta = efficiency(out.c_p, out.f_c);
  return out;
}

OutcomeProbabilities vsp_outcome_probabilities(const MsParams& params) {
  return {0.5 * (1.0 + params.d()), 0.5 * (1.0 - params.d())};
}

OutcomeProbabilities coherent_outcome_probabilities(const MsParams& params, double alpha) {
  const double e = std::exp(-4.0 * alpha * alpha);
  const double d = params.d();
  const double denom = 2.0 * (1.0 + d * e);
  return {(1.0 + d) * (1.0 + e) / denom, (1.0 - d) * (1.0 - e) / denom};
}

}  // namespace ctsim
