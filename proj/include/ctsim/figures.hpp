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

// Regenerates the published figure panels as CSV + SVG pairs.

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace ctsim {

struct FigureOptions {
  std::uint64_t seed = 7;
  int n_starts = 64;
  double r_step = 0.01;
  // Svetlichny panels run a full maximization per point, so they use a
  // coarser grid by default.
  double svetlichny_r_step = 0.02;
};

inline constexpr std::string_view kFigureIds[] = {"fig2", "fig3", "fig4", "fig5", "fig6"};

/// Writes one CSV and one SVG per panel into `out_dir` (created if missing)
/// and returns the written paths in a fixed order. Throws
/// std::invalid_argument for an unknown id.
std::vector<std::filesystem::path> reproduce_figure(std::string_view id, const std::filesystem::path& out_dir,
                                                    const FigureOptions& options = {});

}  // namespace ctsim
