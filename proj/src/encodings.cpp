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

#include "ctsim/encodings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ctsim {

MsParams::MsParams(double theta) : theta_(theta) {
  // Allow a few ulps past pi/2 so that grids built by accumulation still land inside.
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-12))
    throw std::invalid_argument("theta must lie in [0, pi/2], got " + std::to_string(theta));
  theta_ = std::min(theta, std::numbers::pi / 2);
  d_ = std::sin(theta_);
  c_ = std::sqrt(std::max(0.0, 1.0 - d_ * d_));
}

TruncationError::TruncationError(double alpha, int n_max, int required)
    : std::runtime_error("Fock truncation n_max=" + std::to_string(n_max) + " too small for alpha=" +
                         std::to_string(alpha) + "; need n_max >= " + std::to_string(required)),
      required_(required) {}

double coherent_tail_mass(double alpha, int n_max) {
  const double mean = alpha * alpha;
  if (mean == 0.0) return n_max >= 1 ? 0.0 : 1.0;
  // Sum the tail directly in log space; terms decay super-exponentially past the mean.
  double tail = 0.0;
  for (int n = std::max(0, n_max);; ++n) {
    const double log_term = -mean + n * std::log(mean) - std::lgamma(n + 1.0);
    const double term = std::exp(log_term);
    tail += term;
    if (n > mean && term < 1e-30 * std::max(tail, 1e-300)) break;
    if (n > mean + 1000) break;
  }
  return tail;
}

int truncation_for(double alpha) {
  const double a = std::abs(alpha);
  int n = static_cast<int>(std::ceil(a * a + 6.0 * a + 12.0));
  while (coherent_tail_mass(a, n) >= kTailBound) ++n;
  return n;
}

CoherentEncoding CoherentEncoding::with_policy(double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("coherent amplitude must be nonnegative");
  return {alpha, truncation_for(alpha)};
}

void CoherentEncoding::validate() const {
  if (alpha < 0.0) throw std::invalid_argument("coherent amplitude must be nonnegative");
  if (coherent_tail_mass(alpha, n_max) >= kTailBound) throw TruncationError(alpha, n_max, truncation_for(alpha));
}

Ket coherent_ket(double alpha, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  if (coherent_tail_mass(alpha, n_max) >= kTailBound)
    throw TruncationError(alpha, n_max, truncation_for(alpha));
  ComplexVector v(n_max);
  // a^n / sqrt(n!) by recurrence.
  double amp = std::exp(-0.5 * alpha * alpha);
  for (int n = 0; n < n_max; ++n) {
    v[n] = amp;
    amp *= alpha / std::sqrt(n + 1.0);
  }
  return Ket::normalized({n_max}, std::move(v));
}

Ket ms_state_vsp(const MsParams& params) {
  ComplexVector v = ComplexVector::Zero(8);
  const double s = 1.0 / std::numbers::sqrt2;
  v[0b000] = s;
  v[0b111] = s * params.c();
  v[0b011] = s * params.d();
  return Ket::normalized({2, 2, 2}, std::move(v));
}

double ms_coherent_norm_squared(const MsParams& params, double alpha) {
  return 1.0 + params.d() * std::exp(-4.0 * alpha * alpha);
}

Ket ms_state_coherent(const MsParams& params, const CoherentEncoding& enc) {
  enc.validate();
  const Ket plus = coherent_ket(enc.alpha, enc.n_max);
  const Ket minus = coherent_ket(-enc.alpha, enc.n_max);
  const ComplexVector pp = plus.tensor(plus).amplitudes();
  const ComplexVector mm = minus.tensor(minus).amplitudes();
  const Eigen::Index block = pp.size();
  ComplexVector v(2 * block);
  v.head(block) = pp + params.d() * mm;
  v.tail(block) = params.c() * mm;
  return Ket::normalized({2, enc.n_max, enc.n_max}, std::move(v));
}

CharlieBasis charlie_basis(const MsParams& params) {
  const double c = params.c();
  const double d = params.d();
  ComplexVector plus(2), minus(2);
  plus << 1.0 + d, c;
  // (1-d)|0> - c|1> rescaled by (1+d)/c, using (1-d)(1+d) = c^2.
  minus << c, -(1.0 + d);
  return {Ket::normalized({2}, plus), Ket::normalized({2}, minus)};
}

CatBasis cat_basis(double gamma, int n_max) {
  if (gamma < 0.0) throw std::invalid_argument("cat amplitude must be nonnegative");
  if (n_max < 2) throw std::invalid_argument("cat basis needs n_max >= 2");
  if (gamma < 1e-4) return {gamma, n_max, Ket::basis(n_max, 0), Ket::basis(n_max, 1)};
  const Ket plus = coherent_ket(gamma, n_max);
  const Ket minus = coherent_ket(-gamma, n_max);
  // Normalizing numerically absorbs the truncation error of the two components.
  return {gamma, n_max, Ket::normalized({n_max}, plus.amplitudes() + minus.amplitudes()),
          Ket::normalized({n_max}, plus.amplitudes() - minus.amplitudes())};
}

double concurrence(const DensityOperator& rho) {
  if (rho.dims() != Dims{2, 2}) throw std::invalid_argument("concurrence needs a two-qubit state");
  // Wootters: lambdas are the singular values of tau_ij = <psi_i| sy sy |psi_j*>
  // over the subnormalized eigenvectors psi_i = sqrt(p_i) v_i. Working in
  // the support avoids the square root of numerically-zero eigenvalues.
  const HermitianEigen e = eig_hermitian(rho.matrix());
  std::vector<ComplexVector> support;
  for (Eigen::Index k = 0; k < e.values.size(); ++k)
    if (e.values[k] > 1e-14) support.push_back(std::sqrt(e.values[k]) * e.vectors.col(k));
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const auto k = static_cast<Eigen::Index>(support.size());
  ComplexMatrix tau(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) tau(i, j) = support[i].dot(yy * support[j].conjugate());
  const RealVector s = Eigen::JacobiSVD<ComplexMatrix>(tau).singularValues();
  double c = s.size() ? s[0] : 0.0;
  for (Eigen::Index i = 1; i < s.size(); ++i) c -= s[i];
  return std::max(0.0, c);
}

double tangle(const Ket& state) {
  if (state.dims() != Dims{2, 2, 2}) throw std::invalid_argument("tangle needs a (2,2,2) pure state");
  const DensityOperator rho = DensityOperator::from_ket(state);
  const ComplexMatrix r1 = partial_trace(rho, {0}).matrix();
  const double c1_23_sq = 4.0 * (r1(0, 0) * r1(1, 1) - r1(0, 1) * r1(1, 0)).real();
  const double c12 = concurrence(partial_trace(rho, {0, 1}));
  const double c13 = concurrence(partial_trace(rho, {0, 2}));
  return c1_23_sq - c12 * c12 - c13 * c13;
}

}  // namespace ctsim
