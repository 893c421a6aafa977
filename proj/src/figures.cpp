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

#include "ctsim/figures.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ctsim/output.hpp"
#include "ctsim/sweep.hpp"

namespace ctsim {
namespace {

namespace fs = std::filesystem;

struct ThetaCase {
  double value;
  const char* tag;
  const char* label;
};

constexpr ThetaCase kThetas[] = {
    {0.0, "theta0", "theta = 0"},
    {std::numbers::pi / 6, "theta_pi6", "theta = pi/6"},
    {std::numbers::pi / 4, "theta_pi4", "theta = pi/4"},
    {std::numbers::pi / 3, "theta_pi3", "theta = pi/3"},
};

const std::vector<double> kAlphas = {0.20, 0.50, 1.25, 2.50};
// alpha = 0.2 never violates away from theta = 0 and is left off the
// nonlocality panels.
const std::vector<double> kSvetlichnyAlphas = {0.50, 1.25, 2.50};

std::vector<double> all_thetas() {
  std::vector<double> out;
  for (const auto& t : kThetas) out.push_back(t.value);
  return out;
}

class PanelWriter {
 public:
  PanelWriter(fs::path dir, std::string id) : dir_(std::move(dir)), id_(std::move(id)) {}

  void curve(const std::string& name, const std::vector<CurveRecord>& records, Quantity q, const std::string& title) {
    const fs::path base = dir_ / (id_ + "_" + name);
    write_csv(base, records);
    emit_plot(records, svg_path(base), q, {title});
  }

  void parametric(const std::string& name, const std::vector<CurveRecord>& records, const std::string& title) {
    std::vector<CurveRecord> violating;
    std::copy_if(records.begin(), records.end(), std::back_inserter(violating),
                 [](const CurveRecord& rec) { return rec.sv_max && *rec.sv_max > kSvetlichnyClassical; });
    const fs::path base = dir_ / (id_ + "_" + name);
    write_csv(base, violating);
    emit_parametric_plot(violating, svg_path(base), {title});
  }

  std::vector<fs::path> written() && { return std::move(written_); }

 private:
  void write_csv(const fs::path& base, const std::vector<CurveRecord>& records) {
    fs::path path = base;
    path += ".csv";
    // An empty violating region still gets a header-only file.
    if (records.empty()) {
      std::vector<CurveRecord> none;
      const std::string text = to_csv(none);
      std::FILE* f = std::fopen(path.c_str(), "wb");
      if (!f) throw std::runtime_error(path.string() + ": cannot open for writing");
      std::fwrite(text.data(), 1, text.size(), f);
      std::fclose(f);
    } else {
      emit_csv(records, path);
    }
    written_.push_back(path);
  }

  fs::path svg_path(const fs::path& base) {
    fs::path path = base;
    path += ".svg";
    written_.push_back(path);
    return path;
  }

  fs::path dir_;
  std::string id_;
  std::vector<fs::path> written_;
};

std::vector<CurveRecord> filter_theta(const std::vector<CurveRecord>& records, double theta) {
  std::vector<CurveRecord> out;
  for (const auto& rec : records)
    if (rec.theta == theta) out.push_back(rec);
  return out;
}

SweepConfig base_config(Encoding encoding, const FigureOptions& options, bool svetlichny) {
  SweepConfig cfg;
  cfg.encoding = encoding;
  cfg.r_grid = {0.0, 1.0, svetlichny ? options.svetlichny_r_step : options.r_step};
  cfg.svetlichny = svetlichny;
  cfg.n_starts = options.n_starts;
  cfg.seed = options.seed;
  return cfg;
}

// Control power and conditioned fidelity, VSP.
void fig2(PanelWriter& out, const FigureOptions& options) {
  SweepConfig cfg = base_config(Encoding::kVsp, options, false);
  cfg.thetas = all_thetas();
  const auto records = run_sweep(cfg);
  out.curve("left_C_p", records, Quantity::kCp, "VSP control power");
  // F_c does not depend on theta; one series suffices.
  out.curve("right_F_c", filter_theta(records, 0.0), Quantity::kFc, "VSP conditioned fidelity");
}

// Control power and conditioned fidelity, coherent encoding, per theta.
void fig3(PanelWriter& out, const FigureOptions& options) {
  SweepConfig cfg = base_config(Encoding::kCoherent, options, false);
  cfg.thetas = all_thetas();
  cfg.alphas = kAlphas;
  const auto records = run_sweep(cfg);
  for (const auto& t : kThetas) {
    const auto panel = filter_theta(records, t.value);
    out.curve(std::string(t.tag) + "_C_p", panel, Quantity::kCp, std::string("coherent control power, ") + t.label);
    out.curve(std::string(t.tag) + "_F_c", panel, Quantity::kFc,
              std::string("coherent conditioned fidelity, ") + t.label);
  }
}

// Efficiency, VSP against coherent, per theta.
void fig4(PanelWriter& out, const FigureOptions& options) {
  SweepConfig vsp = base_config(Encoding::kVsp, options, false);
  vsp.thetas = all_thetas();
  SweepConfig coh = base_config(Encoding::kCoherent, options, false);
  coh.thetas = all_thetas();
  coh.alphas = kAlphas;
  auto records = run_sweep(vsp);
  const auto coherent = run_sweep(coh);
  records.insert(records.end(), coherent.begin(), coherent.end());
  std::stable_sort(records.begin(), records.end(), record_less);
  for (const auto& t : kThetas)
    out.curve(std::string(t.tag) + "_eta", filter_theta(records, t.value), Quantity::kEta,
              std::string("efficiency, ") + t.label);
}

// Svetlichny maximum, VSP.
void fig5(PanelWriter& out, const FigureOptions& options) {
  SweepConfig cfg = base_config(Encoding::kVsp, options, true);
  cfg.thetas = all_thetas();
  const auto records = run_sweep(cfg);
  out.curve("left_sv_max", records, Quantity::kSvMax, "VSP Svetlichny maximum");
  out.parametric("right_eta_sv_max", records, "VSP violating region");
}

// Svetlichny maximum, coherent encoding, per theta.
void fig6(PanelWriter& out, const FigureOptions& options) {
  SweepConfig cfg = base_config(Encoding::kCoherent, options, true);
  cfg.thetas = all_thetas();
  cfg.alphas = kSvetlichnyAlphas;
  const auto records = run_sweep(cfg);
  for (const auto& t : kThetas) {
    const auto panel = filter_theta(records, t.value);
    out.curve(std::string(t.tag) + "_sv_max", panel, Quantity::kSvMax,
              std::string("coherent Svetlichny maximum, ") + t.label);
    out.parametric(std::string(t.tag) + "_eta_sv_max", panel, std::string("coherent violating region, ") + t.label);
  }
}

}  // namespace

std::vector<fs::path> reproduce_figure(std::string_view id, const fs::path& out_dir, const FigureOptions& options) {
  void (*run)(PanelWriter&, const FigureOptions&) = nullptr;
  if (id == "fig2") run = fig2;
  else if (id == "fig3") run = fig3;
  else if (id == "fig4") run = fig4;
  else if (id == "fig5") run = fig5;
  else if (id == "fig6") run = fig6;
  else throw std::invalid_argument("unknown figure id '" + std::string(id) + "' (expected fig2..fig6)");

  fs::create_directories(out_dir);
  PanelWriter writer(out_dir, std::string(id));
  run(writer, options);
  return std::move(writer).written();
}

}  // namespace ctsim
