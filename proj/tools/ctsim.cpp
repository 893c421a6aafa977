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

// ctsim: controlled teleportation over lossy fibers.
//
//   ctsim sweep --encoding vsp --theta 0,pi/4 --r-start 0 --r-stop 1 --r-step 0.01 --out vsp.csv
//   ctsim figure --id fig4 --out-dir figs
//   ctsim verify

#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctsim/figures.hpp"
#include "ctsim/output.hpp"
#include "ctsim/sweep.hpp"
#include "ctsim/verify.hpp"

namespace {

std::optional<double> parse_double(const std::string& s) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return x;
}

// Plain numbers or multiples of pi: "0.5", "pi", "pi/4", "2pi/3", "2*pi/3".
double parse_angle(const std::string& text) {
  if (auto x = parse_double(text)) return *x;
  static const std::regex form(R"(^([0-9]*\.?[0-9]*)\*?pi(?:/([0-9]*\.?[0-9]+))?$)");
  std::smatch m;
  if (std::regex_match(text, m, form)) {
    const double num = m[1].length() ? parse_double(m[1]).value_or(-1.0) : 1.0;
    const double den = m[2].matched ? parse_double(m[2]).value_or(0.0) : 1.0;
    if (num >= 0.0 && den > 0.0) return num * std::numbers::pi / den;
  }
  throw ctsim::ConfigError("theta", "cannot parse '" + text + "'");
}

int run_sweep_command(ctsim::SweepConfig cfg, const std::string& encoding, const std::vector<std::string>& thetas,
                      const std::string& plot) {
  cfg.encoding = encoding == "vsp" ? ctsim::Encoding::kVsp : ctsim::Encoding::kCoherent;
  for (const auto& t : thetas) cfg.thetas.push_back(parse_angle(t));
  std::optional<ctsim::Quantity> quantity;
  if (!plot.empty()) quantity = ctsim::parse_quantity(plot);
  if (quantity == ctsim::Quantity::kSvMax && !cfg.svetlichny)
    throw ctsim::ConfigError("plot", "sv_max needs --svetlichny");

  const auto records = ctsim::run_sweep(cfg);
  ctsim::emit_csv(records, cfg.out_path);
  std::printf("%zu records -> %s\n", records.size(), cfg.out_path.string().c_str());
  if (quantity) {
    auto svg = cfg.out_path;
    svg.replace_extension(".svg");
    ctsim::emit_plot(records, svg, *quantity);
    std::printf("plot -> %s\n", svg.string().c_str());
  }
  return 0;
}

int run_verify_command() {
  int failed = 0;
  ctsim::run_verification([&](const ctsim::CheckResult& r) {
    std::printf("%s  %s  [%s, %.2fs]\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d check(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Controlled teleportation over lossy optical fibers"};
  app.require_subcommand(1);

  ctsim::SweepConfig sweep_cfg;
  std::string encoding;
  std::vector<std::string> thetas;
  std::string plot;
  std::string out;
  auto* sweep = app.add_subcommand("sweep", "Evaluate the figures of merit on a (theta, alpha, r) grid");
  sweep->add_option("--encoding", encoding, "Photonic qubit encoding")
      ->required()
      ->check(CLI::IsMember({"vsp", "coherent"}));
  sweep->add_option("--theta", thetas, "Comma-separated angles; accepts pi/4, 2pi/3, ...")
      ->required()
      ->delimiter(',');
  sweep->add_option("--alpha", sweep_cfg.alphas, "Comma-separated coherent amplitudes (coherent only)")
      ->delimiter(',');
  sweep->add_option("--r-start", sweep_cfg.r_grid.start, "First normalized time")->capture_default_str();
  sweep->add_option("--r-stop", sweep_cfg.r_grid.stop, "Last normalized time")->capture_default_str();
  sweep->add_option("--r-step", sweep_cfg.r_grid.step, "Normalized time step")->capture_default_str();
  sweep->add_flag("--svetlichny", sweep_cfg.svetlichny, "Also maximize the Svetlichny function (slow)");
  sweep->add_option("--n-starts", sweep_cfg.n_starts, "Optimizer starts per point")->capture_default_str();
  sweep->add_option("--seed", sweep_cfg.seed, "Optimizer seed")->capture_default_str();
  sweep->add_option("--plot", plot, "Also write an SVG of this column (F_c, F_nc, C_p, eta, sv_max)");
  sweep->add_option("--out", out, "CSV output path")->required();

  std::string figure_id;
  std::string out_dir;
  ctsim::FigureOptions figure_options;
  auto* figure = app.add_subcommand("figure", "Write the curves of one figure as CSV + SVG panels");
  figure->add_option("--id", figure_id, "Figure id")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6"}));
  figure->add_option("--out-dir", out_dir, "Output directory")->required();
  figure->add_option("--seed", figure_options.seed, "Optimizer seed")->capture_default_str();
  figure->add_option("--n-starts", figure_options.n_starts, "Optimizer starts per point")->capture_default_str();

  app.add_subcommand("verify", "Run the oracle-equivalence checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      sweep_cfg.out_path = out;
      return run_sweep_command(sweep_cfg, encoding, thetas, plot);
    }
    if (*figure) {
      for (const auto& path : ctsim::reproduce_figure(figure_id, out_dir, figure_options))
        std::printf("%s\n", path.string().c_str());
      return 0;
    }
    return run_verify_command();
  } catch (const ctsim::ConfigError& e) {
    std::fprintf(stderr, "ctsim: invalid --%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ctsim: %s\n", e.what());
    return 1;
  }
}
