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

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "ctsim/output.hpp"

namespace ctsim {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  const double mag = std::abs(x);
  const bool fixed = mag == 0.0 || (mag >= 1e-4 && mag < 1e4);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, fixed ? std::chars_format::fixed : std::chars_format::scientific, 12);
  return std::string(buf, res.ptr);
}

std::string csv_row(const CurveRecord& rec) {
  std::string row;
  row += format_number(rec.r);
  row += ',';
  row += format_number(rec.theta);
  row += ',';
  if (rec.alpha) row += format_number(*rec.alpha);
  row += ',';
  row += format_number(rec.f_c);
  row += ',';
  row += format_number(rec.f_nc);
  row += ',';
  row += format_number(rec.c_p);
  row += ',';
  row += format_number(rec.eta);
  row += ',';
  if (rec.sv_max) row += format_number(*rec.sv_max);
  return row;
}

std::string to_csv(std::span<const CurveRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& rec : records) {
    out += csv_row(rec);
    out += '\n';
  }
  return out;
}

void emit_csv(std::span<const CurveRecord> records, const std::filesystem::path& path) {
  if (records.empty()) throw std::invalid_argument("emit_csv: no records");
  const std::string text = to_csv(records);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.close();
  if (!file) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
}

}  // namespace ctsim
