/*
   Copyright 2026 The charnum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <charnum/curves.hpp>
#include <charnum/io/json.hpp>
#include <charnum/projective.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charnum::io {

/// Affine window of the chart z = 1.
struct Window {
  Rational xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

struct LabeledPoint {
  ProjPoint point;
  std::string label;
};

struct LabeledLine {
  ProjLine line;
  std::string label;
};

struct LabeledCurve {
  HomCurve curve;
  std::string label;
};

struct Scene {
  Window window;
  std::vector<LabeledPoint> points;
  std::vector<LabeledLine> lines;
  std::vector<LabeledCurve> curves;
};

struct RenderOptions {
  int density = 512;  // grid cells per side when tracing curves; cosmetic
  int width = 640;    // pixels
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

/// Maps affine coordinates to pixels, y pointing up.
struct Chart {
  double x0, x1, y0, y1;
  double width, height;

  [[nodiscard]] double px(double x) const { return (x - x0) / (x1 - x0) * width; }
  [[nodiscard]] double py(double y) const { return (y1 - y) / (y1 - y0) * height; }
};

/// Exact clip of a line against the window: the extreme points of its
/// intersection with the rectangle, or nothing when it misses.
inline std::optional<std::pair<std::array<Rational, 2>, std::array<Rational, 2>>> clip(const ProjLine& l,
                                                                                      const Window& w) {
  const Rational &X = l[0], &Y = l[1], &Z = l[2];
  std::vector<std::array<Rational, 2>> hits;
  auto inside = [&](const Rational& v, const Rational& lo, const Rational& hi) { return lo <= v && v <= hi; };
  if (!Y.is_zero()) {
    for (const Rational* x : {&w.xmin, &w.xmax}) {
      const Rational y = -(X * *x + Z) / Y;
      if (inside(y, w.ymin, w.ymax)) hits.push_back({*x, y});
    }
  }
  if (!X.is_zero()) {
    for (const Rational* y : {&w.ymin, &w.ymax}) {
      const Rational x = -(Y * *y + Z) / X;
      if (inside(x, w.xmin, w.xmax)) hits.push_back({x, *y});
    }
  }
  if (hits.empty()) return std::nullopt;
  auto key = [](const std::array<Rational, 2>& p) { return std::make_pair(p[0], p[1]); };
  const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(),
                                            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return std::make_pair(*lo, *hi);
}

/// Floating evaluation of P(x, y, 1) with precomputed exponents.
class FloatPoly {
 public:
  explicit FloatPoly(const HomCurve& c) : mons_(monomials(c.degree())) {
    for (const auto& k : c.coefficients()) coeffs_.push_back(k.to_double());
  }
  [[nodiscard]] double operator()(double x, double y) const {
    double acc = 0;
    for (std::size_t i = 0; i < mons_.size(); ++i) {
      if (coeffs_[i] != 0) acc += coeffs_[i] * std::pow(x, mons_[i].x) * std::pow(y, mons_[i].y);
    }
    return acc;
  }

 private:
  std::vector<Exponent> mons_;
  std::vector<double> coeffs_;
};

/// Marching squares on the zero set of c inside the chart; returns an SVG
/// path string.
inline std::string trace(const HomCurve& c, const Chart& chart, int n) {
  const FloatPoly f(c);
  const double dx = (chart.x1 - chart.x0) / n;
  const double dy = (chart.y1 - chart.y0) / n;
  std::vector<double> g(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto at = [&](int i, int j) -> double& { return g[static_cast<std::size_t>(j * (n + 1) + i)]; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) at(i, j) = f(chart.x0 + i * dx, chart.y0 + j * dy);

  std::string path;
  auto emit = [&](double ax, double ay, double bx, double by) {
    path += "M" + num(chart.px(ax)) + " " + num(chart.py(ay)) + "L" + num(chart.px(bx)) + " " + num(chart.py(by));
  };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = chart.x0 + i * dx, y = chart.y0 + j * dy;
      // Corners counter-clockwise from bottom-left.
      const std::array<double, 4> v{at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      const std::array<std::array<double, 2>, 4> p{{{x, y}, {x + dx, y}, {x + dx, y + dy}, {x, y + dy}}};
      std::vector<std::array<double, 2>> cuts;
      for (int e = 0; e < 4; ++e) {
        const double a = v[e], b = v[(e + 1) % 4];
        if ((a < 0) == (b < 0)) continue;
        const double t = a / (a - b);
        cuts.push_back({p[e][0] + t * (p[(e + 1) % 4][0] - p[e][0]), p[e][1] + t * (p[(e + 1) % 4][1] - p[e][1])});
      }
      if (cuts.size() == 2) {
        emit(cuts[0][0], cuts[0][1], cuts[1][0], cuts[1][1]);
      } else if (cuts.size() == 4) {
        // Saddle: pair the cuts according to the sign at the cell centre.
        const bool centre_neg = f(x + dx / 2, y + dy / 2) < 0;
        if (centre_neg == (v[0] < 0)) {
          emit(cuts[0][0], cuts[0][1], cuts[1][0], cuts[1][1]);
          emit(cuts[2][0], cuts[2][1], cuts[3][0], cuts[3][1]);
        } else {
          emit(cuts[0][0], cuts[0][1], cuts[3][0], cuts[3][1]);
          emit(cuts[1][0], cuts[1][1], cuts[2][0], cuts[2][1]);
        }
      }
    }
  }
  return path;
}

}  // namespace detail

/// SVG 1.1 document for the scene. Points at infinity and the line at
/// infinity go into the legend instead of the drawing.
inline std::string render_svg(const Scene& scene, const RenderOptions& opt = {}) {
  const Window& w = scene.window;
  if (!(w.xmin < w.xmax) || !(w.ymin < w.ymax)) throw std::invalid_argument("empty window");
  if (opt.density < 1 || opt.width < 1) throw std::invalid_argument("density and width must be positive");
  const double x0 = w.xmin.to_double(), x1 = w.xmax.to_double();
  const double y0 = w.ymin.to_double(), y1 = w.ymax.to_double();
  const double width = opt.width;
  const double height = std::round(width * (y1 - y0) / (x1 - x0));
  const detail::Chart chart{x0, x1, y0, y1, width, height};

  std::vector<std::string> legend;
  std::string body;
  for (std::size_t k = 0; k < scene.curves.size(); ++k) {
    const auto& c = scene.curves[k];
    const std::string colour = detail::kPalette[k % detail::kPalette.size()];
    body += "  <path class=\"curve\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"1.5\" d=\"" +
            detail::trace(c.curve, chart, opt.density) + "\"/>\n";
    legend.push_back("<tspan fill=\"" + colour + "\">" + detail::xml_escape(c.label.empty() ? "curve" : c.label) +
                     "</tspan>: " + detail::xml_escape(c.curve.str()));
  }
  for (const auto& l : scene.lines) {
    if (l.line[0].is_zero() && l.line[1].is_zero()) {
      legend.push_back(detail::xml_escape((l.label.empty() ? "" : l.label + " ") + l.line.str() + " is the line at infinity"));
      continue;
    }
    const auto seg = detail::clip(l.line, w);
    if (!seg) continue;
    const auto& [a, b] = *seg;
    const double ax = chart.px(a[0].to_double()), ay = chart.py(a[1].to_double());
    const double bx = chart.px(b[0].to_double()), by = chart.py(b[1].to_double());
    body += "  <line class=\"line\" x1=\"" + detail::num(ax) + "\" y1=\"" + detail::num(ay) + "\" x2=\"" +
            detail::num(bx) + "\" y2=\"" + detail::num(by) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    if (!l.label.empty()) {
      body += "  <text class=\"line-label\" x=\"" + detail::num((ax + bx) / 2 + 4) + "\" y=\"" +
              detail::num((ay + by) / 2 - 4) + "\" font-size=\"12\" fill=\"#444\">" + detail::xml_escape(l.label) +
              "</text>\n";
    }
  }
  for (const auto& p : scene.points) {
    if (!p.point.is_finite()) {
      legend.push_back(detail::xml_escape((p.label.empty() ? "" : p.label + " ") + p.point.str() + " at infinity"));
      continue;
    }
    const double x = (p.point[0] / p.point[2]).to_double();
    const double y = (p.point[1] / p.point[2]).to_double();
    if (x < x0 || x > x1 || y < y0 || y > y1) {
      legend.push_back(detail::xml_escape((p.label.empty() ? "" : p.label + " ") + p.point.str() + " outside window"));
      continue;
    }
    body += "  <circle class=\"point\" cx=\"" + detail::num(chart.px(x)) + "\" cy=\"" + detail::num(chart.py(y)) +
            "\" r=\"3\" fill=\"#000\"/>\n";
    if (!p.label.empty()) {
      body += "  <text class=\"point-label\" x=\"" + detail::num(chart.px(x) + 5) + "\" y=\"" +
              detail::num(chart.py(y) - 5) + "\" font-size=\"12\">" + detail::xml_escape(p.label) + "</text>\n";
    }
  }

  const double legend_height = 18.0 * static_cast<double>(legend.size()) + (legend.empty() ? 0 : 8);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::num(width) + "\" height=\"" +
         detail::num(height + legend_height) + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + detail::num(width) + "\" height=\"" + detail::num(height) +
         "\" fill=\"#fff\" stroke=\"#ccc\"/>\n";
  out += body;
  for (std::size_t i = 0; i < legend.size(); ++i) {
    out += "  <text class=\"legend\" x=\"4\" y=\"" + detail::num(height + 18.0 * static_cast<double>(i + 1)) +
           "\" font-size=\"12\">" + legend[i] + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

/// {"window": [xmin, xmax, ymin, ymax], "points": [...], "lines": [...],
///  "curves": [...]}. Points are [x,y,z] or {"at": [x,y,z], "label": s};
/// lines are [X,Y,Z] or {"line": [X,Y,Z], "label": s}; curves carry an
/// optional "label" next to degree and coefficients.
inline Scene scene_from_json(const json& j, const std::string& ptr = "") {
  Scene s;
  const std::string wptr = detail::child(ptr, "window");
  const json& win = detail::array_of(detail::member(j, ptr, "window"), wptr, 4);
  s.window = {rational_from_json(win[0], detail::child(wptr, 0)), rational_from_json(win[1], detail::child(wptr, 1)),
              rational_from_json(win[2], detail::child(wptr, 2)), rational_from_json(win[3], detail::child(wptr, 3))};
  if (!(s.window.xmin < s.window.xmax) || !(s.window.ymin < s.window.ymax)) throw InputError("empty window", wptr);
  auto label_of = [](const json& item) {
    return item.is_object() && item.contains("label") && item["label"].is_string() ? item["label"].get<std::string>()
                                                                                   : std::string();
  };
  if (j.contains("points")) {
    const std::string pp = detail::child(ptr, "points");
    const json& arr = detail::array_of(j["points"], pp, 0);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ip = detail::child(pp, i);
      const json& item = arr[i];
      const ProjPoint p = item.is_object() ? point_from_json(detail::member(item, ip, "at"), detail::child(ip, "at"))
                                           : point_from_json(item, ip);
      s.points.push_back({p, label_of(item)});
    }
  }
  if (j.contains("lines")) {
    const std::string lp = detail::child(ptr, "lines");
    const json& arr = detail::array_of(j["lines"], lp, 0);
    for (std::size_t i = 0; i < arr.size(); ++i) s.lines.push_back({line_from_json(arr[i], detail::child(lp, i)), label_of(arr[i])});
  }
  if (j.contains("curves")) {
    const std::string cp = detail::child(ptr, "curves");
    const json& arr = detail::array_of(j["curves"], cp, 0);
    for (std::size_t i = 0; i < arr.size(); ++i) s.curves.push_back({curve_from_json(arr[i], detail::child(cp, i)), label_of(arr[i])});
  }
  return s;
}

}  // namespace charnum::io
