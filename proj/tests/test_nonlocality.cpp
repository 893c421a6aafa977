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
#include <random>

#include "ctsim/channel.hpp"
#include "ctsim/nonlocality.hpp"
#include "oracles.hpp"

using namespace ctsim;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = kPi / 2;

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

DensityOperator vsp_state(double theta, double r) {
  return damp_vsp(DensityOperator::from_ket(ms_state_vsp(MsParams(theta))), DampingParams::from_r(r));
}

// Equatorial settings that reach 4 sqrt 2 on the GHZ state.
SvetlichnySettings ghz_optimal() {
  return SvetlichnySettings(Encoding::kVsp,
                            {kHalf, -kPi / 4, kHalf, kPi / 4, kHalf, 0.0, kHalf, kHalf, kHalf, 0.0, kHalf, kHalf});
}

// Sum of signed correlators built from Bloch-vector observables.
double oracle_svetlichny(const ComplexMatrix& rho, const SvetlichnySettings& s) {
  const auto& p = s.params();
  auto obs = [&](int party, int primed) { return oracle::bloch_observable(p[4 * party + 2 * primed], p[4 * party + 2 * primed + 1]); };
  double total = 0.0;
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        total += (a + b + c <= 1 ? 1.0 : -1.0) * oracle::three_qubit_correlator(rho, obs(0, c), obs(1, a), obs(2, b));
  return total;
}

std::array<double, 12> random_params(std::mt19937_64& rng, double beta_box = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 12> p{};
  for (int i = 0; i < 12; ++i) {
    const bool mode = beta_box > 0.0 && i >= 4;
    p[i] = mode ? beta_box * (2 * u(rng) - 1) : (i % 2 ? 2 * kPi : kPi) * u(rng);
  }
  return p;
}

}  // namespace

TEST_CASE("rotated_sigma_z") {
  CHECK(max_abs(rotated_sigma_z({0.0, 0.7}) - oracle::pauli(3)) < 1e-15);
  CHECK(max_abs(rotated_sigma_z({kPi, 0.0}) + oracle::pauli(3)) < 1e-12);
  CHECK(std::abs(rotated_sigma_z({kHalf, 0.0})(0, 0)) < 1e-12);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const QubitSetting s{kPi * u(rng), 2 * kPi * u(rng)};
    const ComplexMatrix m = rotated_sigma_z(s);
    CHECK(max_abs(m - m.adjoint()) < 1e-12);
    CHECK(std::abs(m.trace()) < 1e-12);
    CHECK(max_abs(m * m - ComplexMatrix::Identity(2, 2)) < 1e-12);
    const auto n = s.bloch();
    CHECK(max_abs(m - oracle::bloch_observable(s.omega, s.delta)) < 1e-12);
    CHECK(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] == doctest::Approx(1.0));
    CHECK(std::abs(s.zeta() - (-0.5 * s.omega * std::exp(Complex(0, -s.delta)))) < 1e-15);
  }
}

TEST_CASE("displaced_parity") {
  const int n = 30;
  CHECK(std::abs(displaced_parity({0.0}, n)(0, 0) - 1.0) < 1e-12);

  const ComplexVector a1 = oracle::fock_coherent(1.0, n);
  double fock_sum = 0.0;
  for (int k = 0; k < n; ++k) fock_sum += (k % 2 ? -1.0 : 1.0) * std::norm(a1(k));
  CHECK(fock_sum == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
  const Complex zero_disp = a1.dot(displaced_parity({0.0}, n) * a1);
  CHECK(std::abs(zero_disp - std::exp(-2.0)) < 1e-10);
  const Complex half_disp = a1.dot(displaced_parity({0.5}, n) * a1);
  CHECK(std::abs(half_disp - std::exp(-0.5)) < 1e-9);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex beta(0.6 * u(rng), 0.6 * u(rng));
    const double x = 1.2 * u(rng), y = 1.2 * u(rng);
    const ComplexMatrix pi = displaced_parity({beta}, n);
    CHECK(max_abs(pi - pi.adjoint()) < 1e-10);
    const Complex fock = oracle::fock_coherent(x, n).dot(pi * oracle::fock_coherent(y, n));
    CHECK(std::abs(fock - displaced_parity_element(x, y, beta)) < 1e-9);
    // On the low-lying block the operator still squares to identity.
    const ComplexMatrix sq = pi * pi;
    CHECK(max_abs(sq.topLeftCorner(8, 8) - ComplexMatrix::Identity(8, 8)) < 1e-6);
  }

  CHECK_THROWS_AS(displaced_parity({Complex(2.0, 0.0)}, 9), std::invalid_argument);
}

TEST_CASE("svetlichny sign pattern and classical bound") {
  CHECK(svetlichny_sign(0, 0, 0) == 1);
  CHECK(svetlichny_sign(1, 0, 0) == 1);
  CHECK(svetlichny_sign(0, 0, 1) == 1);
  CHECK(svetlichny_sign(1, 1, 0) == -1);
  CHECK(svetlichny_sign(1, 1, 1) == -1);
  CHECK(oracle::deterministic_svetlichny_max() == 4.0);
}

TEST_CASE("svetlichny_value") {
  const auto ghz = vsp_state(0.0, 0.0);
  CHECK(std::abs(svetlichny_value(ghz, ghz_optimal())) == doctest::Approx(kSvetlichnyQuantum).epsilon(1e-12));

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho({2, 2, 2}, oracle::random_density(8, rng));
    const SvetlichnySettings s(Encoding::kVsp, random_params(rng));
    const double v = svetlichny_value(rho, s);
    CHECK(v == doctest::Approx(oracle_svetlichny(rho.matrix(), s)).epsilon(1e-10));
    CHECK(std::abs(v) <= kSvetlichnyQuantum + 1e-6);

    // Equal primed and unprimed settings cancel term by term.
    auto p = random_params(rng);
    for (int party = 0; party < 3; ++party)
      for (int k = 0; k < 2; ++k) p[4 * party + 2 + k] = p[4 * party + k];
    CHECK(std::abs(svetlichny_value(rho, SvetlichnySettings(Encoding::kVsp, p))) < 1e-12);
  }

  ComplexVector zero = ComplexVector::Zero(8);
  zero(0) = 1.0;
  const auto product = DensityOperator::from_ket(Ket({2, 2, 2}, zero));
  for (int trial = 0; trial < 50; ++trial)
    CHECK(std::abs(svetlichny_value(product, SvetlichnySettings(Encoding::kVsp, random_params(rng)))) <= 4.0 + 1e-9);

  CHECK_THROWS_AS(svetlichny_value(DensityOperator({2, 2}, 0.25 * ComplexMatrix::Identity(4, 4)), ghz_optimal()),
                  std::invalid_argument);
}

TEST_CASE("coherent svetlichny_value: frame and Fock space agree") {
  std::mt19937_64 rng(77);
  for (double alpha : {0.3, 0.9})
    for (double r : {0.0, 0.5}) {
      const auto enc = CoherentEncoding::with_policy(alpha);
      const auto frame = evolve_ms_coherent_frame(MsParams(kPi / 6), alpha, DampingParams::from_r(r));
      const auto fock = evolve_ms_coherent(MsParams(kPi / 6), enc, DampingParams::from_r(r));
      for (int trial = 0; trial < 4; ++trial) {
        const SvetlichnySettings s(Encoding::kCoherent, random_params(rng, 0.6 * displacement_bound(enc.n_max)));
        const double v = svetlichny_value(frame, s);
        CHECK(v == doctest::Approx(svetlichny_value(fock, s)).epsilon(1e-9));
        CHECK(std::abs(v) <= kSvetlichnyQuantum + 1e-6);
      }
    }
}

TEST_CASE("settings canonical form") {
  const SvetlichnySettings s(Encoding::kCoherent, {4.0, -1.0, 7.0, 13.0, 5.0, -5.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
  const auto c = s.canonical(2.0);
  for (int primed = 0; primed < 2; ++primed) {
    const auto q = c.charlie(primed);
    CHECK(q.omega >= 0.0);
    CHECK(q.omega <= kPi);
    CHECK(q.delta >= 0.0);
    CHECK(q.delta < 2 * kPi);
    CHECK(max_abs(rotated_sigma_z(q) - rotated_sigma_z(s.charlie(primed))) < 1e-12);
  }
  CHECK(std::abs(c.alice_mode(0).beta.real()) <= 2.0);
  CHECK(std::abs(c.alice_mode(0).beta.imag()) <= 2.0);
  CHECK(std::abs(c.alice_mode(1).beta - s.alice_mode(1).beta) < 1e-15);
  CHECK_THROWS_AS(s.alice_qubit(0), std::logic_error);
}

TEST_CASE("maximize_svetlichny on VSP states") {
  const auto ghz = vsp_state(0.0, 0.0);
  const auto best = maximize_svetlichny(ghz, Encoding::kVsp);
  CHECK(best.s_max == doctest::Approx(kSvetlichnyQuantum).epsilon(1e-5));
  CHECK(std::abs(std::abs(svetlichny_value(ghz, best.best)) - best.s_max) < 1e-10);

  for (double theta : {0.0, kPi / 4, kPi / 2})
    CHECK(maximize_svetlichny(vsp_state(theta, 1.0), Encoding::kVsp).s_max <= 4.0 + 1e-6);

  // Reproducible for a fixed seed.
  const auto state = vsp_state(kPi / 6, 0.3);
  MaximizeOptions opts;
  opts.n_starts = 16;
  CHECK(maximize_svetlichny(state, Encoding::kVsp, opts).s_max == maximize_svetlichny(state, Encoding::kVsp, opts).s_max);
  opts.n_starts = 0;
  CHECK_THROWS_AS(maximize_svetlichny(state, Encoding::kVsp, opts), std::invalid_argument);

  // Loss never helps the GHZ violation.
  double previous = 10.0;
  for (int j = 0; j <= 10; ++j) {
    const double s = maximize_svetlichny(vsp_state(0.0, j / 10.0), Encoding::kVsp).s_max;
    CHECK(s <= previous + 1e-6);
    CHECK(s <= kSvetlichnyQuantum + 1e-6);
    previous = s;
  }
  // The violation shrinks with theta at r = 0.
  CHECK(maximize_svetlichny(vsp_state(kPi / 6, 0.0), Encoding::kVsp).s_max < best.s_max - 1e-3);
}

TEST_CASE("maximize_svetlichny start count convergence") {
  MaximizeOptions base, doubled;
  doubled.n_starts = 128;
  for (double theta : {kPi / 6, kPi / 3})
    for (double r : {0.2, 0.5}) {
      const auto state = vsp_state(theta, r);
      CHECK(std::abs(maximize_svetlichny(state, Encoding::kVsp, base).s_max -
                     maximize_svetlichny(state, Encoding::kVsp, doubled).s_max) < 2e-4);
    }
  const auto frame = evolve_ms_coherent_frame(MsParams(0.0), 1.25, DampingParams::from_r(0.1));
  CHECK(std::abs(maximize_svetlichny(frame, base).s_max - maximize_svetlichny(frame, doubled).s_max) < 2e-4);
}

TEST_CASE("coherent violation needs a large amplitude away from theta = 0") {
  const MsParams params(kPi / 4);
  for (double r : {0.0, 0.3})
    CHECK(maximize_svetlichny(evolve_ms_coherent_frame(params, 0.2, DampingParams::from_r(r))).s_max <= 4.0 + 1e-6);
  const auto large = maximize_svetlichny(evolve_ms_coherent_frame(params, 2.5, DampingParams::from_r(0.0)));
  CHECK(large.s_max > 4.0);
  CHECK(large.s_max <= kSvetlichnyQuantum + 1e-6);
}

TEST_CASE("maximize_svetlichny on a Fock-space coherent state") {
  // Same state through both representations, small amplitude so the box fits the truncation.
  const double alpha = 0.5;
  const auto enc = CoherentEncoding::with_policy(alpha);
  const auto frame = evolve_ms_coherent_frame(MsParams(0.0), alpha, DampingParams::from_r(0.2));
  const auto fock = frame.materialize(enc.n_max);
  MaximizeOptions opts;
  opts.n_starts = 2;
  opts.beta_max = displacement_bound(enc.n_max) / std::sqrt(2.0);
  opts.max_evaluations = 300;
  const auto a = maximize_svetlichny(fock, Encoding::kCoherent, opts);
  CHECK(std::abs(std::abs(svetlichny_value(frame, a.best)) - a.s_max) < 1e-8);
}
