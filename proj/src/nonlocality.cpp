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

#include "ctsim/nonlocality.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "ctsim/parallel.hpp"
#include "ctsim/simplex.hpp"

namespace ctsim {
namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double x) {
  double y = std::fmod(x, 2.0 * kPi);
  if (y < 0.0) y += 2.0 * kPi;
  return y;
}

// Triangle-wave reflection of x into [-bound, bound].
double reflect_into(double x, double bound) {
  if (bound <= 0.0) return 0.0;
  double y = std::fmod(x + bound, 4.0 * bound);
  if (y < 0.0) y += 4.0 * bound;
  return y <= 2.0 * bound ? y - bound : 3.0 * bound - y;
}

using Correlators = std::array<std::array<std::array<Complex, 2>, 2>, 2>;  // [charlie][alice][bob]

double combine(const Correlators& e) {
  double s = 0.0;
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) s += svetlichny_sign(a, b, c) * e[c][a][b].real();
  return s;
}

// Tr(rho (x (x) y (x) z)) for rho on (dx, dy, dz).
Complex three_body(const ComplexMatrix& rho, const Dims& dims, const ComplexMatrix& x, const ComplexMatrix& y,
                   const ComplexMatrix& z) {
  const int dy = dims[1], dz = dims[2];
  const int block = dy * dz;
  const ComplexMatrix zt = z.transpose();
  Complex total = 0.0;
  for (int i = 0; i < dims[0]; ++i)
    for (int ip = 0; ip < dims[0]; ++ip) {
      if (x(ip, i) == 0.0) continue;
      Complex acc = 0.0;
      for (int j = 0; j < dy; ++j)
        for (int jp = 0; jp < dy; ++jp) {
          if (y(jp, j) == 0.0) continue;
          const auto sub = rho.block(i * block + j * dz, ip * block + jp * dz, dz, dz);
          acc += y(jp, j) * sub.cwiseProduct(zt).sum();
        }
      total += x(ip, i) * acc;
    }
  return total;
}

ComplexMatrix party_operator(const SvetlichnySettings& s, bool alice, int primed, int dim) {
  if (s.encoding() == Encoding::kVsp) return rotated_sigma_z(alice ? s.alice_qubit(primed) : s.bob_qubit(primed));
  return displaced_parity(alice ? s.alice_mode(primed) : s.bob_mode(primed), dim);
}

void check_dims(const DensityOperator& rho, Encoding e) {
  const Dims& d = rho.dims();
  if (e == Encoding::kVsp && d != Dims{2, 2, 2}) throw std::invalid_argument("VSP Svetlichny needs dims (2,2,2)");
  if (e == Encoding::kCoherent && (d.size() != 3 || d[0] != 2 || d[1] != d[2]))
    throw std::invalid_argument("coherent Svetlichny needs dims (2,n,n)");
}

double tensor_value(const std::array<double, 27>& t, const SvetlichnySettings& s) {
  std::array<std::array<double, 3>, 2> nc{s.charlie(0).bloch(), s.charlie(1).bloch()};
  std::array<std::array<double, 3>, 2> na{s.alice_qubit(0).bloch(), s.alice_qubit(1).bloch()};
  std::array<std::array<double, 3>, 2> nb{s.bob_qubit(0).bloch(), s.bob_qubit(1).bloch()};
  double total = 0.0;
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a) {
      // Contract Charlie and Alice first, then Bob.
      std::array<double, 3> partial{0.0, 0.0, 0.0};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double w = nc[c][i] * na[a][j];
          for (int k = 0; k < 3; ++k) partial[k] += w * t[i * 9 + j * 3 + k];
        }
      for (int b = 0; b < 2; ++b)
        total += svetlichny_sign(a, b, c) * (partial[0] * nb[b][0] + partial[1] * nb[b][1] + partial[2] * nb[b][2]);
    }
  return total;
}

SvetlichnyMax run_maximizer(const std::function<double(const SvetlichnySettings&)>& value, Encoding encoding,
                            double beta_max, const MaximizeOptions& options) {
  if (options.n_starts < 1) throw std::invalid_argument("maximize_svetlichny: n_starts must be at least 1");
  const bool modes = encoding == Encoding::kCoherent;

  auto to_settings = [&](std::span<const double> x) {
    std::array<double, 12> p{};
    std::copy(x.begin(), x.end(), p.begin());
    return SvetlichnySettings(encoding, p);
  };
  auto objective = [&](std::span<const double> x) {
    return -std::abs(value(to_settings(x).canonical(beta_max)));
  };

  struct StartResult {
    double value = -1.0;
    std::array<double, 12> x{};
    int evaluations = 0;
    double peak = 0.0;
  };
  std::vector<StartResult> results(options.n_starts);
  parallel_for(results.size(), [&](std::size_t k) {
    std::seed_seq seq{static_cast<std::uint64_t>(options.seed), static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x0(12);
    for (int party = 0; party < 3; ++party)
      for (int primed = 0; primed < 2; ++primed) {
        const int base = party * 4 + primed * 2;
        if (party == 0 || !modes) {
          x0[base] = kPi * unit(rng);
          x0[base + 1] = 2.0 * kPi * unit(rng);
        } else {
          // Displaced-parity correlations decay like exp(-2|beta|^2), so most
          // starts sit near the origin; every fourth one covers the whole box.
          const double box = k % 4 == 3 ? beta_max : std::min(beta_max, 1.0);
          x0[base] = box * (2.0 * unit(rng) - 1.0);
          x0[base + 1] = box * (2.0 * unit(rng) - 1.0);
        }
      }
    SimplexOptions simplex;
    simplex.initial_step = 0.6;
    simplex.f_tolerance = options.tolerance;
    simplex.max_evaluations = options.max_evaluations;
    StartResult& out = results[k];
    auto tracked = [&](std::span<const double> x) {
      const double f = objective(x);
      out.peak = std::max(out.peak, -f);
      return f;
    };
    const SimplexResult r = nelder_mead(tracked, x0, simplex);
    out.value = -r.value;
    std::copy(r.x.begin(), r.x.end(), out.x.begin());
    out.evaluations = r.evaluations;
  });

  std::size_t best = 0;
  int evaluations = 0;
  double peak = 0.0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    evaluations += results[k].evaluations;
    peak = std::max(peak, results[k].peak);
    if (results[k].value > results[best].value) best = k;
  }
  const SvetlichnySettings settings = SvetlichnySettings(encoding, results[best].x).canonical(beta_max);
  return {std::abs(value(settings)), settings, evaluations, peak};
}

}  // namespace

const char* to_string(Encoding e) { return e == Encoding::kVsp ? "vsp" : "coherent"; }

Complex QubitSetting::zeta() const { return -0.5 * omega * std::exp(Complex(0.0, -delta)); }

std::array<double, 3> QubitSetting::bloch() const {
  return {std::sin(omega) * std::cos(delta), std::sin(omega) * std::sin(delta), std::cos(omega)};
}

ComplexMatrix rotated_sigma_z(const QubitSetting& s) {
  const Complex z = s.zeta();
  const double mag = std::abs(z);
  ComplexMatrix rot(2, 2);
  if (mag == 0.0) {
    rot.setIdentity();
  } else {
    const Complex phase = z / mag;
    rot << std::cos(mag), phase * std::sin(mag), -std::conj(phase) * std::sin(mag), std::cos(mag);
  }
  ComplexMatrix sz = ComplexMatrix::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  return rot * sz * rot.adjoint();
}

double displacement_bound(int n_max) { return std::sqrt(static_cast<double>(n_max)) / 3.0; }

ComplexMatrix displaced_parity(const ModeSetting& s, int n_max) {
  if (n_max < 1) throw std::invalid_argument("displaced_parity: n_max must be positive");
  if (std::abs(s.beta) > displacement_bound(n_max) + 1e-12)
    throw std::invalid_argument("displaced_parity: |beta| = " + std::to_string(std::abs(s.beta)) +
                                " exceeds the truncation bound " + std::to_string(displacement_bound(n_max)));
  const int padded = 2 * n_max + 20;
  ComplexMatrix a = ComplexMatrix::Zero(padded, padded);
  for (int n = 1; n < padded; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const ComplexMatrix generator = s.beta * a.adjoint() - std::conj(s.beta) * a;
  const ComplexMatrix d = generator.exp();
  ComplexMatrix parity = ComplexMatrix::Zero(padded, padded);
  for (int n = 0; n < padded; ++n) parity(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  ComplexMatrix full = d * parity * d.adjoint();
  ComplexMatrix out = full.topLeftCorner(n_max, n_max);
  return 0.5 * (out + out.adjoint());
}

Complex displaced_parity_element(Complex bra, Complex ket, Complex beta) {
  // D(b) P D(b)^+ |k> = exp(2i Im(b* k)) |2b - k>
  const Complex image = 2.0 * beta - ket;
  const Complex phase = std::exp(Complex(0.0, 2.0 * std::imag(std::conj(beta) * ket)));
  const Complex overlap = std::exp(-0.5 * std::norm(bra) - 0.5 * std::norm(image) + std::conj(bra) * image);
  return phase * overlap;
}

SvetlichnySettings::SvetlichnySettings(Encoding encoding, const std::array<double, 12>& params)
    : encoding_(encoding), params_(params) {}

QubitSetting SvetlichnySettings::charlie(int primed) const { return {params_[2 * primed], params_[2 * primed + 1]}; }

QubitSetting SvetlichnySettings::alice_qubit(int primed) const {
  if (encoding_ != Encoding::kVsp) throw std::logic_error("alice holds a mode in the coherent encoding");
  return {params_[4 + 2 * primed], params_[5 + 2 * primed]};
}

QubitSetting SvetlichnySettings::bob_qubit(int primed) const {
  if (encoding_ != Encoding::kVsp) throw std::logic_error("bob holds a mode in the coherent encoding");
  return {params_[8 + 2 * primed], params_[9 + 2 * primed]};
}

ModeSetting SvetlichnySettings::alice_mode(int primed) const {
  if (encoding_ != Encoding::kCoherent) throw std::logic_error("alice holds a qubit in the VSP encoding");
  return {Complex(params_[4 + 2 * primed], params_[5 + 2 * primed])};
}

ModeSetting SvetlichnySettings::bob_mode(int primed) const {
  if (encoding_ != Encoding::kCoherent) throw std::logic_error("bob holds a qubit in the VSP encoding");
  return {Complex(params_[8 + 2 * primed], params_[9 + 2 * primed])};
}

SvetlichnySettings SvetlichnySettings::canonical(double beta_max) const {
  std::array<double, 12> p = params_;
  for (int party = 0; party < 3; ++party)
    for (int primed = 0; primed < 2; ++primed) {
      const int base = party * 4 + primed * 2;
      if (party == 0 || encoding_ == Encoding::kVsp) {
        double omega = wrap_angle(p[base]);
        double delta = p[base + 1];
        if (omega > kPi) {
          omega = 2.0 * kPi - omega;
          delta += kPi;
        }
        p[base] = omega;
        p[base + 1] = wrap_angle(delta);
      } else {
        p[base] = reflect_into(p[base], beta_max);
        p[base + 1] = reflect_into(p[base + 1], beta_max);
      }
    }
  return SvetlichnySettings(encoding_, p);
}

int svetlichny_sign(int alice_primed, int bob_primed, int charlie_primed) {
  return alice_primed + bob_primed + charlie_primed <= 1 ? 1 : -1;
}

double svetlichny_value(const DensityOperator& rho, const SvetlichnySettings& settings) {
  check_dims(rho, settings.encoding());
  const int dim = rho.dims()[1];
  const std::array<ComplexMatrix, 2> c{rotated_sigma_z(settings.charlie(0)), rotated_sigma_z(settings.charlie(1))};
  const std::array<ComplexMatrix, 2> a{party_operator(settings, true, 0, dim), party_operator(settings, true, 1, dim)};
  const std::array<ComplexMatrix, 2> b{party_operator(settings, false, 0, dim), party_operator(settings, false, 1, dim)};
  Correlators e{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) e[i][j][k] = three_body(rho.matrix(), rho.dims(), c[i], a[j], b[k]);
  return combine(e);
}

double svetlichny_value(const FrameOperator& rho, const SvetlichnySettings& settings) {
  if (settings.encoding() != Encoding::kCoherent) throw std::invalid_argument("frame states use the coherent encoding");
  if (!rho.has_qubit() || rho.mode_count() != 2) throw std::invalid_argument("frame Svetlichny needs qubit + two modes");
  const auto& kets = rho.kets();
  const auto& coeffs = rho.coeffs();
  const std::size_t n = kets.size();
  const std::array<ComplexMatrix, 2> c{rotated_sigma_z(settings.charlie(0)), rotated_sigma_z(settings.charlie(1))};

  // elements[party][primed][l * n + k] = <mode_l| Pi |mode_k>
  std::array<std::array<std::vector<Complex>, 2>, 2> elements;
  for (int party = 0; party < 2; ++party)
    for (int primed = 0; primed < 2; ++primed) {
      const Complex beta = party == 0 ? settings.alice_mode(primed).beta : settings.bob_mode(primed).beta;
      auto& table = elements[party][primed];
      table.resize(n * n);
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
          table[l * n + k] = displaced_parity_element(kets[l].modes[party], kets[k].modes[party], beta);
    }

  Correlators e{};
  for (int ci = 0; ci < 2; ++ci)
    for (int ai = 0; ai < 2; ++ai)
      for (int bi = 0; bi < 2; ++bi) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            // Tr(c_kl |k><l| O) = c_kl <l|O|k>
            acc += coeffs(k, l) * c[ci](*kets[l].qubit, *kets[k].qubit) * elements[0][ai][l * n + k] *
                   elements[1][bi][l * n + k];
          }
        e[ci][ai][bi] = acc;
      }
  return combine(e);
}

std::array<double, 27> correlation_tensor(const DensityOperator& rho) {
  if (rho.dims() != Dims{2, 2, 2}) throw std::invalid_argument("correlation_tensor needs dims (2,2,2)");
  std::array<ComplexMatrix, 3> pauli;
  for (auto& p : pauli) p = ComplexMatrix::Zero(2, 2);
  pauli[0](0, 1) = pauli[0](1, 0) = 1.0;
  pauli[1](0, 1) = Complex(0.0, -1.0);
  pauli[1](1, 0) = Complex(0.0, 1.0);
  pauli[2](0, 0) = 1.0;
  pauli[2](1, 1) = -1.0;
  std::array<double, 27> t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        t[i * 9 + j * 3 + k] = three_body(rho.matrix(), rho.dims(), pauli[i], pauli[j], pauli[k]).real();
  return t;
}

SvetlichnyMax maximize_svetlichny(const DensityOperator& rho, Encoding encoding, const MaximizeOptions& options) {
  check_dims(rho, encoding);
  if (encoding == Encoding::kVsp) {
    const auto t = correlation_tensor(rho);
    return run_maximizer([&](const SvetlichnySettings& s) { return tensor_value(t, s); }, encoding, 0.0, options);
  }
  // The box is square, so its corners must stay inside the truncation disk.
  const double beta_max =
      options.beta_max > 0.0 ? options.beta_max : displacement_bound(rho.dims()[1]) / std::numbers::sqrt2;
  return run_maximizer([&](const SvetlichnySettings& s) { return svetlichny_value(rho, s); }, encoding, beta_max,
                       options);
}

SvetlichnyMax maximize_svetlichny(const FrameOperator& rho, const MaximizeOptions& options) {
  const double gamma = std::abs(rho.kets().front().modes.front());
  const double beta_max = options.beta_max > 0.0 ? options.beta_max : 2.0 * (gamma + 1.0);
  return run_maximizer([&](const SvetlichnySettings& s) { return svetlichny_value(rho, s); }, Encoding::kCoherent,
                       beta_max, options);
}

}  // namespace ctsim
