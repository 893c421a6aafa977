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

#pragma once

// CSV and SVG emission for sweep records.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "ctsim/sweep.hpp"

namespace ctsim {

inline constexpr std::string_view kCsvHeader = "r,theta,alpha,F_c,F_nc,C_p,eta,sv_max";

/// Fixed-point with 12 fractional digits for |x| in [1e-4, 1e4) and for zero,
/// scientific with 12 fractional digits otherwise. Locale independent.
std::string format_number(double x);

std::string csv_row(const CurveRecord& rec);
std::string to_csv(std::span<const CurveRecord> records);

/// Writes the CSV; throws std::invalid_argument on empty input and
/// std::runtime_error carrying the system message on I/O failure.
void emit_csv(std::span<const CurveRecord> records, const std::filesystem::path& path);

enum class Quantity { kFc, kFnc, kCp, kEta, kSvMax };

/// Accepts the CSV column names (F_c, F_nc, C_p, eta, sv_max).
Quantity parse_quantity(std::string_view name);
std::string_view quantity_name(Quantity q);
double quantity_value(const CurveRecord& rec, Quantity q);

struct PlotOptions {
  std::string title;
  int width = 640;
  int height = 420;
};

/// Line chart of `quantity` against r, one polyline per (theta, alpha)
/// series. Fidelity plots carry a dashed guide at 2/3; Svetlichny plots a
/// dashed guide at 4 and a dotted cap at 4 sqrt 2.
std::string render_plot(std::span<const CurveRecord> records, Quantity quantity, const PlotOptions& options = {});
void emit_plot(std::span<const CurveRecord> records, const std::filesystem::path& path, Quantity quantity,
               const PlotOptions& options = {});

/// Parametric (eta, |S_v|max) chart restricted to records that violate the
/// Svetlichny bound.
std::string render_parametric_plot(std::span<const CurveRecord> records, const PlotOptions& options = {});
void emit_parametric_plot(std::span<const CurveRecord> records, const std::filesystem::path& path,
                          const PlotOptions& options = {});

}  // namespace ctsim
