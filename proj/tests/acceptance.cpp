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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
//   acceptance <path-to-ctsim>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "ctsim/channel.hpp"
#include "ctsim/encodings.hpp"
#include "ctsim/nonlocality.hpp"
#include "ctsim/teleport.hpp"

using namespace ctsim;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
std::string g_ctsim;

struct Verdict {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

// Conditioned / non-conditioned VSP fidelity written out by hand.
double fc_expected(double r) {
  const double r2 = r * r;
  return (3.0 + 2.0 * std::abs(r2 - 1.0) + std::abs(1.0 - 2.0 * r2 + 2.0 * r2 * r2)) / 6.0;
}
double fnc_expected(double theta, double r) {
  const double r2 = r * r;
  return (3.0 + 2.0 * std::sin(theta) * std::abs(r2 - 1.0) + std::abs(1.0 - 2.0 * r2 + 2.0 * r2 * r2)) / 6.0;
}

Verdict classical_anchor() {
  const auto f = ct_pipeline_vsp(MsParams(0.0), DampingParams::from_r(0.0));
  const double dev = std::max(std::abs(f.f_nc - 2.0 / 3.0), std::abs(f.f_c - 1.0));
  return {dev <= 1e-9, fmt("F_nc=%.12f F_c=%.12f", f.f_nc, f.f_c)};
}

Verdict closed_form() {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j) {
      const double theta = kPi / 2 * i / 49.0, r = j / 49.0;
      const auto f = ct_pipeline_vsp(MsParams(theta), DampingParams::from_r(r));
      worst = std::max({worst, std::abs(f.f_c - fc_expected(r)), std::abs(f.f_nc - fnc_expected(theta, r))});
    }
  return {worst <= 1e-9, fmt("max |dF|=%.3e over 50x50", worst)};
}

Verdict control_power_flat() {
  double worst = 0.0;
  for (int j = 0; j <= 50; ++j) {
    const auto damping = DampingParams::from_r(j / 50.0);
    worst = std::max(worst, std::abs(ct_pipeline_vsp(MsParams(0.0), damping).c_p - 1.0));
    for (double alpha : {0.2, 0.5, 1.25, 2.5})
      worst = std::max(worst, std::abs(ct_pipeline_coherent(MsParams(0.0), alpha, damping).c_p - 1.0));
  }
  return {worst <= 1e-9, fmt("max |C_p-1|=%.3e", worst)};
}

Verdict channel_oracle() {
  double vsp = 0.0;
  for (double theta : {0.0, kPi / 6, kPi / 4, kPi / 3, kPi / 2})
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const auto rho0 = DensityOperator::from_ket(ms_state_vsp(MsParams(theta)));
      const auto damping = DampingParams::from_r(r);
      LindbladConfig cfg;
      cfg.t_final = damping.time_at_rate(1.0);
      cfg.dt = 0.001;
      vsp = std::max(vsp, trace_distance(lindblad_integrate(rho0, cfg), damp_vsp(rho0, damping)));
    }
  double coh = 0.0;
  for (double alpha : {0.2, 0.5, 1.25})
    for (double theta : {0.0, kPi / 4})
      for (double r : {0.3, 0.7}) {
        const MsParams params(theta);
        const auto enc = CoherentEncoding::with_policy(alpha);
        const auto damping = DampingParams::from_r(r);
        LindbladConfig cfg;
        cfg.t_final = damping.time_at_rate(1.0);
        cfg.dt = 0.01;
        cfg.n_max = enc.n_max;
        const auto rho0 = DensityOperator::from_ket(ms_state_coherent(params, enc));
        coh = std::max(coh, trace_distance(lindblad_integrate(rho0, cfg), evolve_ms_coherent(params, enc, damping)));
      }
  return {vsp <= 1e-6 && coh <= 1e-5, fmt("vsp D=%.3e, coherent D=%.3e", vsp, coh)};
}

Verdict fef_oracle_check() {
  std::mt19937_64 rng(515);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    ComplexMatrix a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = Complex(g(rng), g(rng));
    // Mix in a rank-deficient fraction so nearly pure states are covered too.
    if (k % 4 == 0) a.col(0) *= 6.0;
    ComplexMatrix m = a * a.adjoint();
    m /= m.trace().real();
    const DensityOperator rho({2, 2}, 0.5 * (m + m.adjoint()));
    worst = std::max(worst, std::abs(fully_entangled_fraction(rho) - fef_oracle(rho)));
  }
  return {worst <= 1e-6, fmt("max |df|=%.3e over 200 states", worst)};
}

Verdict svetlichny_anchors() {
  MaximizeOptions opts;
  opts.n_starts = 64;
  const auto ghz = maximize_svetlichny(DensityOperator::from_ket(ms_state_vsp(MsParams(0.0))), Encoding::kVsp, opts);
  const auto full = DampingParams::from_r(1.0);
  double product = 0.0, peak = ghz.peak;
  for (double theta : {0.0, kPi / 4}) {
    const auto vsp = damp_vsp(DensityOperator::from_ket(ms_state_vsp(MsParams(theta))), full);
    const auto a = maximize_svetlichny(vsp, Encoding::kVsp, opts);
    const auto b = maximize_svetlichny(evolve_ms_coherent_frame(MsParams(theta), 1.25, full), opts);
    product = std::max({product, a.s_max, b.s_max, a.peak, b.peak});
  }
  const bool ok = std::abs(ghz.s_max - kSvetlichnyQuantum) <= 1e-4 && peak <= kSvetlichnyQuantum + 1e-6 &&
                  product <= kSvetlichnyClassical + 1e-6;
  return {ok, fmt("GHZ %.8f, peak %.8f, damped product %.8f", ghz.s_max, peak, product)};
}

Verdict figure_properties() {
  std::string detail;
  bool ok = true;

  // (a) alpha 0.5 and 2.5 F_c curves at theta 0 change order inside (0,1).
  int sign_changes = 0;
  double crossing = -1.0;
  double prev = 0.0;
  for (int j = 1; j < 100; ++j) {
    const auto d = DampingParams::from_r(j / 100.0);
    const double diff = ct_pipeline_coherent(MsParams(0.0), 0.5, d).f_c - ct_pipeline_coherent(MsParams(0.0), 2.5, d).f_c;
    if (j > 1 && diff * prev < 0.0) {
      ++sign_changes;
      crossing = j / 100.0;
    }
    prev = diff;
  }
  ok = ok && sign_changes > 0;
  detail += fmt("(a) crossing near r=%.2f", crossing);

  // (b) VSP efficiency at theta 0, r 0 is not exceeded by any alpha.
  const auto r0 = DampingParams::from_r(0.0);
  const double eta_vsp = ct_pipeline_vsp(MsParams(0.0), r0).eta;
  double eta_coh = 0.0;
  for (double alpha : {0.2, 0.5, 1.25, 2.5}) eta_coh = std::max(eta_coh, ct_pipeline_coherent(MsParams(0.0), alpha, r0).eta);
  ok = ok && eta_vsp >= eta_coh - 1e-12;
  detail += fmt("; (b) eta vsp %.6f vs coherent max %.6f", eta_vsp, eta_coh);

  // (c) theta pi/4: large amplitude violates, small does not.
  MaximizeOptions opts;
  const double big = maximize_svetlichny(evolve_ms_coherent_frame(MsParams(kPi / 4), 2.5, r0), opts).s_max;
  const double small = maximize_svetlichny(evolve_ms_coherent_frame(MsParams(kPi / 4), 0.2, r0), opts).s_max;
  ok = ok && big > kSvetlichnyClassical + 1e-6 && small <= kSvetlichnyClassical + 1e-6;
  detail += fmt("; (c) S(2.5)=%.4f S(0.2)=%.4f", big, small);

  // (d) VSP theta 0: violation region vs eta > 0 region.
  int violating = 0, efficient = 0;
  bool nested = true;
  for (int j = 0; j <= 20; ++j) {
    const auto d = DampingParams::from_r(j / 20.0);
    const bool eff = ct_pipeline_vsp(MsParams(0.0), d).eta > 0.0;
    const auto rho = damp_vsp(DensityOperator::from_ket(ms_state_vsp(MsParams(0.0))), d);
    const bool viol = maximize_svetlichny(rho, Encoding::kVsp, opts).s_max > kSvetlichnyClassical + 1e-6;
    violating += viol;
    efficient += eff;
    nested = nested && (!viol || eff);
  }
  ok = ok && nested && violating < efficient;
  detail += fmt("; (d) violation at %.0f of 21 r, eta>0 at %.0f", violating, efficient);
  return {ok, detail};
}

Verdict tangle_law() {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double theta = kPi / 2 * k / 19.0;
    worst = std::max(worst, std::abs(tangle(ms_state_vsp(MsParams(theta))) - std::pow(std::cos(theta), 2)));
  }
  return {worst <= 1e-8, fmt("max dev %.3e", worst)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  if (g_ctsim.empty()) return {false, "no ctsim binary given"};
  const fs::path root = fs::temp_directory_path() / "ctsim_acceptance_det";
  fs::remove_all(root);
  for (const char* run : {"a", "b"}) {
    const std::string cmd = "\"" + g_ctsim + "\" figure --id fig4 --seed 7 --out-dir \"" + (root / run).string() +
                            "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) return {false, "ctsim figure exited nonzero"};
  }
  int files = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    if (entry.path().extension() != ".csv") continue;
    ++files;
    const fs::path other = root / "b" / entry.path().filename();
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other))
      return {false, "differs: " + entry.path().filename().string()};
  }
  return {files > 0, fmt("%.0f CSV files identical", files)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_ctsim = argv[1];
  const Criterion criteria[] = {
      {1, "classical-bound anchor", 1, classical_anchor},
      {2, "closed-form equivalence", 10, closed_form},
      {3, "control-power flatness", 30, control_power_flat},
      {4, "channel oracle equivalence", 120, channel_oracle},
      {5, "fully-entangled-fraction oracle", 60, fef_oracle_check},
      {6, "Svetlichny anchors", 120, svetlichny_anchors},
      {7, "qualitative figure properties", 600, figure_properties},
      {8, "tangle law", 1, tangle_law},
      {9, "figure determinism", 300, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = v.passed && in_time;
    failed += !pass;
    std::printf("%s %d %s: %s [%.2fs / %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs,
                c.budget_seconds, in_time ? "" : " over budget");
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
