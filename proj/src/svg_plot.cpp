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

#include <algorithm>
#include <array>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "ctsim/output.hpp"

namespace ctsim {
namespace {

constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
// solid, dashed, dot-dashed, dotted
constexpr std::array<const char*, 4> kDashes = {"", "8,4", "8,3,2,3", "2,3"};

std::string num(double x, int digits = 2) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Series {
  double theta;
  std::optional<double> alpha;
  std::vector<std::pair<double, double>> points;
};

std::string series_label(const Series& s) {
  std::string label = "theta=" + num(s.theta, 4);
  label += s.alpha ? ", alpha=" + num(*s.alpha, 2) : ", VSP";
  return label;
}

// Groups consecutive records by (theta, alpha) after sorting.
template <typename Pick>
std::vector<Series> group(std::span<const CurveRecord> records, Pick pick) {
  std::vector<CurveRecord> sorted(records.begin(), records.end());
  std::stable_sort(sorted.begin(), sorted.end(), record_less);
  std::vector<Series> out;
  for (const auto& rec : sorted) {
    const auto point = pick(rec);
    if (!point) continue;
    if (out.empty() || out.back().theta != rec.theta || out.back().alpha != rec.alpha)
      out.push_back({rec.theta, rec.alpha, {}});
    out.back().points.push_back(*point);
  }
  return out;
}

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;
  int width, height;
  static constexpr double kLeft = 70, kRight = 190, kTop = 40, kBottom = 55;

  double px(double x) const { return kLeft + (x - x_lo) / (x_hi - x_lo) * (width - kLeft - kRight); }
  double py(double y) const { return height - kBottom - (y - y_lo) / (y_hi - y_lo) * (height - kTop - kBottom); }
};

class SvgWriter {
 public:
  SvgWriter(const Frame& f, const std::string& title) : f_(f) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(f.width) + "\" height=\"" +
            std::to_string(f.height) + "\" viewBox=\"0 0 " + std::to_string(f.width) + " " + std::to_string(f.height) +
            "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out_ += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(f.width) + "\" height=\"" + std::to_string(f.height) +
            "\" fill=\"white\"/>\n";
    if (!title.empty())
      out_ += "<text x=\"" + num(f.width / 2.0) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
              escape(title) + "</text>\n";
  }

  void axes(const std::string& x_label, const std::string& y_label, int ticks = 5) {
    const double x0 = f_.px(f_.x_lo), x1 = f_.px(f_.x_hi), y0 = f_.py(f_.y_lo), y1 = f_.py(f_.y_hi);
    line(x0, y0, x1, y0, "black", "", 1.0);
    line(x0, y0, x0, y1, "black", "", 1.0);
    for (int i = 0; i <= ticks; ++i) {
      const double xv = f_.x_lo + (f_.x_hi - f_.x_lo) * i / ticks;
      const double yv = f_.y_lo + (f_.y_hi - f_.y_lo) * i / ticks;
      line(f_.px(xv), y0, f_.px(xv), y0 + 5, "black", "", 1.0);
      text(f_.px(xv), y0 + 18, num(xv), "middle");
      line(x0 - 5, f_.py(yv), x0, f_.py(yv), "black", "", 1.0);
      text(x0 - 8, f_.py(yv) + 4, num(yv), "end");
    }
    text((x0 + x1) / 2, f_.height - 15, x_label, "middle");
    out_ += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
            num((y0 + y1) / 2) + ")\">" + escape(y_label) + "</text>\n";
  }

  void guide(double y, const char* dash, const std::string& label) {
    if (y < f_.y_lo || y > f_.y_hi) return;
    line(f_.px(f_.x_lo), f_.py(y), f_.px(f_.x_hi), f_.py(y), "gray", dash, 1.0);
    if (!label.empty()) text(f_.px(f_.x_hi) - 4, f_.py(y) - 4, label, "end");
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const char* color, const char* dash) {
    out_ += "<polyline fill=\"none\" stroke=\"";
    out_ += color;
    out_ += "\" stroke-width=\"1.6\"";
    if (*dash) out_ += std::string(" stroke-dasharray=\"") + dash + "\"";
    out_ += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ += ' ';
      out_ += num(f_.px(pts[i].first)) + "," + num(f_.py(pts[i].second));
    }
    out_ += "\"/>\n";
  }

  void circles(const std::vector<std::pair<double, double>>& pts, const char* color, std::size_t every) {
    for (std::size_t i = 0; i < pts.size(); i += every)
      out_ += "<circle cx=\"" + num(f_.px(pts[i].first)) + "\" cy=\"" + num(f_.py(pts[i].second)) +
              "\" r=\"3\" fill=\"none\" stroke=\"" + color + "\"/>\n";
  }

  void legend_entry(int index, const std::string& label, const char* color, const char* dash, bool marker) {
    const double x = f_.width - Frame::kRight + 15;
    const double y = Frame::kTop + 10 + 18 * index;
    line(x, y, x + 28, y, color, dash, 1.6);
    if (marker)
      out_ += "<circle cx=\"" + num(x + 14) + "\" cy=\"" + num(y) + "\" r=\"3\" fill=\"none\" stroke=\"" + color +
              "\"/>\n";
    text(x + 34, y + 4, label, "start");
  }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  void line(double x0, double y0, double x1, double y1, const char* color, const char* dash, double width) {
    out_ += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
            "\" stroke=\"" + color + "\" stroke-width=\"" + num(width, 1) + "\"";
    if (*dash) out_ += std::string(" stroke-dasharray=\"") + dash + "\"";
    out_ += "/>\n";
  }

  void text(double x, double y, const std::string& s, const char* anchor) {
    out_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\">" + escape(s) + "</text>\n";
  }

  Frame f_;
  std::string out_;
};

void draw_series(SvgWriter& svg, const std::vector<Series>& series) {
  const bool mixed = std::any_of(series.begin(), series.end(), [](const Series& s) { return !s.alpha; }) &&
                     std::any_of(series.begin(), series.end(), [](const Series& s) { return s.alpha.has_value(); });
  int style = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const Series& s = series[i];
    const bool vsp_marked = mixed && !s.alpha;
    const char* color = vsp_marked ? "black" : kColors[style % kColors.size()];
    const char* dash = vsp_marked ? "" : kDashes[style % kDashes.size()];
    if (!vsp_marked) ++style;
    svg.polyline(s.points, color, dash);
    if (vsp_marked) svg.circles(s.points, color, std::max<std::size_t>(1, s.points.size() / 12));
    svg.legend_entry(static_cast<int>(i), series_label(s), color, dash, vsp_marked);
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.close();
  if (!file) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
}

}  // namespace

Quantity parse_quantity(std::string_view name) {
  if (name == "F_c") return Quantity::kFc;
  if (name == "F_nc") return Quantity::kFnc;
  if (name == "C_p") return Quantity::kCp;
  if (name == "eta") return Quantity::kEta;
  if (name == "sv_max") return Quantity::kSvMax;
  throw std::invalid_argument("unknown quantity '" + std::string(name) + "' (expected F_c, F_nc, C_p, eta, sv_max)");
}

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kFc: return "F_c";
    case Quantity::kFnc: return "F_nc";
    case Quantity::kCp: return "C_p";
    case Quantity::kEta: return "eta";
    case Quantity::kSvMax: return "sv_max";
  }
  return "";
}

double quantity_value(const CurveRecord& rec, Quantity q) {
  switch (q) {
    case Quantity::kFc: return rec.f_c;
    case Quantity::kFnc: return rec.f_nc;
    case Quantity::kCp: return rec.c_p;
    case Quantity::kEta: return rec.eta;
    case Quantity::kSvMax:
      if (!rec.sv_max) throw std::invalid_argument("record has no sv_max");
      return *rec.sv_max;
  }
  return 0.0;
}

std::string render_plot(std::span<const CurveRecord> records, Quantity quantity, const PlotOptions& options) {
  const auto series = group(records, [&](const CurveRecord& rec) -> std::optional<std::pair<double, double>> {
    if (quantity == Quantity::kSvMax && !rec.sv_max) return std::nullopt;
    return std::pair{rec.r, quantity_value(rec, quantity)};
  });
  const bool fidelity = quantity == Quantity::kFc || quantity == Quantity::kFnc;
  Frame frame{0.0, 1.0, 0.0, 1.0, options.width, options.height};
  if (fidelity) frame.y_lo = 0.5;
  if (quantity == Quantity::kSvMax) frame.y_hi = 6.0;

  SvgWriter svg(frame, options.title);
  svg.axes("normalized time r", std::string(quantity_name(quantity)));
  if (fidelity) svg.guide(2.0 / 3.0, "6,4", "2/3");
  if (quantity == Quantity::kSvMax) {
    svg.guide(kSvetlichnyClassical, "6,4", "4");
    svg.guide(kSvetlichnyQuantum, "2,3", "4√2");
  }
  draw_series(svg, series);
  return svg.finish();
}

void emit_plot(std::span<const CurveRecord> records, const std::filesystem::path& path, Quantity quantity,
               const PlotOptions& options) {
  if (records.empty()) throw std::invalid_argument("emit_plot: no records");
  write_text(path, render_plot(records, quantity, options));
}

std::string render_parametric_plot(std::span<const CurveRecord> records, const PlotOptions& options) {
  const auto series = group(records, [](const CurveRecord& rec) -> std::optional<std::pair<double, double>> {
    if (!rec.sv_max || *rec.sv_max <= kSvetlichnyClassical) return std::nullopt;
    return std::pair{rec.eta, *rec.sv_max};
  });
  Frame frame{0.0, 1.0, kSvetlichnyClassical, 6.0, options.width, options.height};
  SvgWriter svg(frame, options.title);
  svg.axes("eta", "sv_max", 4);
  svg.guide(kSvetlichnyQuantum, "2,3", "4√2");
  draw_series(svg, series);
  return svg.finish();
}

void emit_parametric_plot(std::span<const CurveRecord> records, const std::filesystem::path& path,
                          const PlotOptions& options) {
  write_text(path, render_parametric_plot(records, options));
}

}  // namespace ctsim
