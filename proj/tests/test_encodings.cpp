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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ctsim/encodings.hpp"
#include "oracles.hpp"

using namespace ctsim;

namespace {

constexpr double kPi = std::numbers::pi;

Complex amp(const Ket& k, int index) { return k.amplitudes()(index); }

}  // namespace

TEST_CASE("MsParams") {
  for (double t : {0.0, 0.4, kPi / 2}) {
    const MsParams p(t);
    CHECK(p.c() * p.c() + p.d() * p.d() == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(MsParams(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(MsParams(2.0), std::invalid_argument);
}

TEST_CASE("coherent_ket") {
  const Ket vac = coherent_ket(0.0, 5);
  CHECK(std::abs(amp(vac, 0) - 1.0) < 1e-15);
  CHECK(vac.amplitudes().tail(4).norm() == 0.0);

  const Ket a = coherent_ket(1.0, 20);
  const Ket m = coherent_ket(-1.0, 20);
  CHECK(std::abs(a.inner(a) - 1.0) < 1e-10);
  CHECK(std::abs(m.inner(a) - std::exp(-2.0)) < 1e-10);
  CHECK((a.amplitudes() - oracle::fock_coherent(1.0, 20)).norm() < 1e-10);

  const auto enc = CoherentEncoding::with_policy(2.5);
  const Ket big = coherent_ket(2.5, enc.n_max);
  const Complex mean = big.amplitudes().adjoint() * oracle::number_operator(enc.n_max) * big.amplitudes();
  CHECK(mean.real() == doctest::Approx(6.25).epsilon(1e-9));
}

TEST_CASE("truncation policy") {
  for (double alpha : {0.0, 0.2, 0.5, 1.25, 2.5, 4.0}) {
    const int n = truncation_for(alpha);
    CHECK(n >= static_cast<int>(std::ceil(alpha * alpha + 6 * alpha + 12)));
    CHECK(coherent_tail_mass(alpha, n) < kTailBound);
    CHECK_NOTHROW(CoherentEncoding::with_policy(alpha).validate());
  }
  // Tail mass is the Poisson remainder.
  const double direct = 1.0 - oracle::fock_coherent(1.5, 6).squaredNorm();
  CHECK(coherent_tail_mass(1.5, 6) == doctest::Approx(direct).epsilon(1e-10));

  try {
    coherent_ket(2.5, 10);
    FAIL("expected a truncation error");
  } catch (const TruncationError& e) {
    CHECK(e.required_n_max() == truncation_for(2.5));
  }
}

TEST_CASE("ms_state_vsp") {
  const Ket ghz = ms_state_vsp(MsParams(0.0));
  CHECK(std::abs(amp(ghz, 0b000) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(amp(ghz, 0b111) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(amp(ghz, 0b011)) < 1e-15);

  const Ket bell = ms_state_vsp(MsParams(kPi / 2));
  CHECK(std::abs(amp(bell, 0b000) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(amp(bell, 0b011) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(amp(bell, 0b111)) < 1e-15);
  CHECK(bell.dims() == Dims{2, 2, 2});
}

TEST_CASE("ms_state_coherent") {
  for (double theta : {0.0, kPi / 6, kPi / 4, kPi / 2})
    for (double alpha : {0.2, 0.5, 1.25, 2.5}) {
      const MsParams params(theta);
      const auto enc = CoherentEncoding::with_policy(alpha);
      const Ket ms = ms_state_coherent(params, enc);
      CHECK(std::abs(ms.inner(ms) - 1.0) < 1e-10);
      CHECK(ms_coherent_norm_squared(params, alpha) ==
            doctest::Approx(1.0 + std::sin(theta) * std::exp(-4 * alpha * alpha)).epsilon(1e-12));

      // Unnormalized pattern assembled from oracle kets.
      const ComplexVector p = oracle::fock_coherent(alpha, enc.n_max);
      const ComplexVector m = oracle::fock_coherent(-alpha, enc.n_max);
      ComplexVector pp(p.size() * p.size()), mm(p.size() * p.size());
      for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
          pp(i * p.size() + j) = p(i) * p(j);
          mm(i * p.size() + j) = m(i) * m(j);
        }
      ComplexVector v(2 * pp.size());
      v.head(pp.size()) = (pp + params.d() * mm) / std::sqrt(2.0);
      v.tail(pp.size()) = params.c() * mm / std::sqrt(2.0);
      CHECK(v.squaredNorm() == doctest::Approx(ms_coherent_norm_squared(params, alpha)).epsilon(1e-10));
      CHECK(std::abs(std::abs(ms.amplitudes().dot(v)) / v.norm() - 1.0) < 1e-10);
    }

  // theta = pi/2, alpha = 0.5: squared norm 1 + e^{-1}.
  CHECK(ms_coherent_norm_squared(MsParams(kPi / 2), 0.5) == doctest::Approx(1.0 + std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("ms_state_coherent approaches the VSP pattern for large alpha") {
  // Map |+-a> onto cat qubits; with negligible overlap the state is the VSP one.
  const double alpha = 2.5;
  const auto enc = CoherentEncoding::with_policy(alpha);
  const Ket ms = ms_state_coherent(MsParams(kPi / 3), enc);
  const Ket plus = coherent_ket(alpha, enc.n_max), minus = coherent_ket(-alpha, enc.n_max);
  const Ket vsp = ms_state_vsp(MsParams(kPi / 3));
  ComplexVector pattern = ComplexVector::Zero(ms.dimension());
  for (int q = 0; q < 8; ++q) {
    const Ket& ka = (q >> 1) & 1 ? minus : plus;
    const Ket& kb = q & 1 ? minus : plus;
    const ComplexVector prod = ka.tensor(kb).amplitudes();
    pattern.segment((q >> 2) * prod.size(), prod.size()) += amp(vsp, q) * prod;
  }
  CHECK(std::norm(ms.amplitudes().dot(pattern)) >= 1.0 - 1e-8);
}

TEST_CASE("charlie_basis") {
  const auto b0 = charlie_basis(MsParams(0.0));
  CHECK(std::abs(amp(b0.plus, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(amp(b0.plus, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(std::abs(amp(b0.minus, 0)) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(amp(b0.minus, 0) + amp(b0.minus, 1)) < 1e-15);

  const auto b90 = charlie_basis(MsParams(kPi / 2));
  CHECK(std::abs(std::abs(amp(b90.plus, 0)) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(amp(b90.minus, 1)) - 1.0) < 1e-12);

  for (int k = 0; k <= 20; ++k) {
    const MsParams params(kPi / 2 * k / 20.0);
    const auto b = charlie_basis(params);
    CHECK(std::abs(b.plus.inner(b.minus)) < 1e-12);
    const ComplexMatrix completeness = b.plus.amplitudes() * b.plus.amplitudes().adjoint() +
                                       b.minus.amplitudes() * b.minus.amplitudes().adjoint();
    CHECK((completeness - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    // xi+ is proportional to (1+d)|0> + c|1>.
    const double d = params.d(), c = params.c();
    CHECK(std::abs(amp(b.plus, 0) * c - amp(b.plus, 1) * (1.0 + d)) < 1e-12);
  }
}

TEST_CASE("cat_basis") {
  const auto zero = cat_basis(0.0, 6);
  CHECK(std::abs(zero.even.amplitudes()(0) - 1.0) < 1e-15);
  CHECK(std::abs(zero.odd.amplitudes()(1) - 1.0) < 1e-15);

  for (double g : {0.01, 0.5, 1.0, 2.0}) {
    const int n = truncation_for(g);
    const auto cb = cat_basis(g, n);
    CHECK(std::abs(cb.even.inner(cb.odd)) < 1e-12);
    CHECK(std::abs(cb.even.inner(cb.even) - 1.0) < 1e-10);
    const ComplexVector a = oracle::fock_coherent(g, n), b = oracle::fock_coherent(-g, n);
    CHECK(std::abs(a.dot(b) - std::exp(-2 * g * g)) < 1e-10);
  }

  const auto half = cat_basis(0.5, truncation_for(0.5));
  const Complex n_even = half.even.amplitudes().adjoint() * oracle::number_operator(half.n_max) *
                         half.even.amplitudes();
  CHECK(n_even.real() == doctest::Approx(0.25 * std::tanh(0.25)).epsilon(1e-10));
  CHECK(n_even.real() == doctest::Approx(0.061).epsilon(0.01));
}

TEST_CASE("tangle") {
  CHECK(tangle(ms_state_vsp(MsParams(0.0))) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(tangle(ms_state_vsp(MsParams(kPi / 2)))) < 1e-12);
  CHECK(tangle(ms_state_vsp(MsParams(kPi / 4))) == doctest::Approx(0.5).epsilon(1e-10));

  for (int k = 0; k < 20; ++k) {
    const double theta = kPi / 2 * k / 19.0;
    const double t = tangle(ms_state_vsp(MsParams(theta)));
    CHECK(std::abs(t - std::cos(theta) * std::cos(theta)) < 1e-8);
  }

  // Random pure states against the hyperdeterminant.
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    ComplexVector v(8);
    for (int i = 0; i < 8; ++i) v(i) = Complex(g(rng), g(rng));
    v.normalize();
    const double t = tangle(Ket({2, 2, 2}, v));
    CHECK(std::abs(t - oracle::tangle_hyperdeterminant(v)) < 1e-8);
    CHECK(t >= -1e-10);
    CHECK(t <= 1.0 + 1e-10);
  }

  CHECK_THROWS_AS(tangle(Ket::basis(8, 0)), std::invalid_argument);
}

TEST_CASE("concurrence") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    ComplexVector v(4);
    for (int i = 0; i < 4; ++i) v(i) = Complex(g(rng), g(rng));
    v.normalize();
    const double pure = 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
    CHECK(concurrence(DensityOperator::from_ket(Ket({2, 2}, v))) == doctest::Approx(pure).epsilon(1e-9));
  }
  CHECK(std::abs(concurrence(DensityOperator({2, 2}, 0.25 * ComplexMatrix::Identity(4, 4)))) < 1e-12);
}
