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
#include <charnum/pascal.hpp>
#include <charnum/projective.hpp>
#include <charnum/spline.hpp>

#include <json.hpp>

#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// JSON schema:
//   rational  "p/q" | "p" | integer       (floats are rejected)
//   point     [x, y, z]
//   line      [X, Y, Z] | {"line": [X, Y, Z]}
//   curve     {"degree": n, "coefficients": [...]}   graded-lex order
//   frame     {"lines": [a, b, c]}  or  {"lines": {"a": .., "b": .., "c": ..}}
//   framed    frame + {"points": {"a": [...], "b": [...], "c": [...]}}
//   ms        {"mu": m, "lines": {"u": .., "v": .., "w": ..}, "edges": [[a, b], ...]}
//             or {"outer": [A, B, C], "inner": [a, b, c]} (smoothness 1)

namespace charnum::io {

using nlohmann::json;

/// Malformed input. `pointer` locates the offending value inside the document.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::string pointer)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  [[nodiscard]] const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct TextPosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

inline TextPosition position_of(std::string_view text, std::size_t offset) {
  TextPosition pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

namespace detail {

// Maps each JSON pointer of a syntactically valid document to the byte offset
// where its value starts. Used only to attach positions to schema errors.
class PositionScanner {
 public:
  explicit PositionScanner(std::string_view text) : s_(text) {}

  std::map<std::string, std::size_t> scan() {
    skip_ws();
    value("");
    return std::move(out_);
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  std::string string_token() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
      out += s_[i_++];
    }
    ++i_;
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  void value(const std::string& ptr) {
    out_[ptr] = i_;
    if (i_ >= s_.size()) return;
    const char c = s_[i_];
    if (c == '{') {
      ++i_;
      skip_ws();
      while (i_ < s_.size() && s_[i_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++i_;  // colon
        skip_ws();
        value(ptr + "/" + escape(key));
        skip_ws();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
        skip_ws();
      }
      ++i_;
    } else if (c == '[') {
      ++i_;
      skip_ws();
      for (std::size_t k = 0; i_ < s_.size() && s_[i_] != ']'; ++k) {
        value(ptr + "/" + std::to_string(k));
        skip_ws();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
        skip_ws();
      }
      ++i_;
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ']' && s_[i_] != '}' &&
             !std::isspace(static_cast<unsigned char>(s_[i_])))
        ++i_;
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::map<std::string, std::size_t> out_;
};

inline std::string child(const std::string& ptr, std::string_view key) { return ptr + "/" + std::string(key); }
inline std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

inline const json& member(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) throw InputError("expected an object", ptr);
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"", ptr);
  return *it;
}

inline const json& array_of(const json& j, const std::string& ptr, std::size_t size) {
  if (!j.is_array()) throw InputError("expected an array", ptr);
  if (size != 0 && j.size() != size) {
    throw InputError("expected " + std::to_string(size) + " elements, got " + std::to_string(j.size()), ptr);
  }
  return j;
}

}  // namespace detail

/// A parsed document plus the positions of its values.
class Document {
 public:
  Document(std::string text, std::string name) : text_(std::move(text)), name_(std::move(name)) {
    try {
      root_ = json::parse(text_);
    } catch (const json::parse_error& e) {
      const auto pos = position_of(text_, e.byte == 0 ? 0 : e.byte - 1);
      std::string what = e.what();
      // Strip the library prefix "[json.exception.parse_error.101] parse error at line 1, column 2: ".
      if (auto k = what.find(": "); k != std::string::npos) what = what.substr(k + 2);
      throw std::runtime_error(name_ + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + what);
    }
    positions_ = detail::PositionScanner(text_).scan();
  }

  [[nodiscard]] const json& root() const { return root_; }
  [[nodiscard]] const std::string& name() const { return name_; }

  /// "name:line:col: message" for an InputError raised while reading this
  /// document.
  [[nodiscard]] std::string diagnose(const InputError& e) const {
    std::string ptr = e.pointer();
    // Fall back to the closest enclosing value that exists in the text.
    while (!positions_.contains(ptr) && !ptr.empty()) ptr = ptr.substr(0, ptr.rfind('/'));
    const auto it = positions_.find(ptr);
    const auto pos = position_of(text_, it == positions_.end() ? 0 : it->second);
    return name_ + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + e.what();
  }

 private:
  std::string text_;
  std::string name_;
  json root_;
  std::map<std::string, std::size_t> positions_;
};

// ---- reading ---------------------------------------------------------------

inline Rational rational_from_json(const json& j, const std::string& ptr = "") {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
    return Rational(j.get<long long>());
  }
  if (j.is_number_float()) throw InputError("floating-point literal; write rationals as \"p/q\" strings", ptr);
  if (!j.is_string()) throw InputError("expected a rational (\"p/q\" string or integer)", ptr);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(e.what(), ptr);
  }
}

inline Triple triple_from_json(const json& j, const std::string& ptr) {
  detail::array_of(j, ptr, 3);
  return {rational_from_json(j[0], detail::child(ptr, 0)), rational_from_json(j[1], detail::child(ptr, 1)),
          rational_from_json(j[2], detail::child(ptr, 2))};
}

inline ProjPoint point_from_json(const json& j, const std::string& ptr = "") {
  Triple t = triple_from_json(j, ptr);
  if (is_zero(t)) throw InputError("point coordinates all zero", ptr);
  return ProjPoint(std::move(t));
}

inline ProjLine line_from_json(const json& j, const std::string& ptr = "") {
  if (j.is_object()) return line_from_json(detail::member(j, ptr, "line"), detail::child(ptr, "line"));
  Triple t = triple_from_json(j, ptr);
  if (is_zero(t)) throw InputError("line coefficients all zero", ptr);
  return ProjLine(std::move(t));
}

inline std::vector<ProjPoint> points_from_json(const json& j, const std::string& ptr, std::size_t size = 0) {
  detail::array_of(j, ptr, size);
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_from_json(j[i], detail::child(ptr, i)));
  return out;
}

inline HomCurve curve_from_json(const json& j, const std::string& ptr = "") {
  const json& d = detail::member(j, ptr, "degree");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 64) {
    throw InputError("degree must be an integer in 1..64", detail::child(ptr, "degree"));
  }
  const int degree = d.get<int>();
  const std::string cptr = detail::child(ptr, "coefficients");
  const json& c = detail::array_of(detail::member(j, ptr, "coefficients"), cptr, monomial_count(degree));
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) coeffs.push_back(rational_from_json(c[i], detail::child(cptr, i)));
  HomPoly p(degree, std::move(coeffs));
  if (p.is_zero()) throw InputError("all curve coefficients are zero", cptr);
  return HomCurve(std::move(p));
}

/// Three named lines from {"lines": [..]} or {"lines": {k0: .., k1: .., k2: ..}}.
inline std::array<ProjLine, 3> three_lines_from_json(const json& j, const std::string& ptr,
                                                     const std::array<const char*, 3>& keys) {
  const std::string lptr = detail::child(ptr, "lines");
  const json& l = detail::member(j, ptr, "lines");
  if (l.is_object()) {
    return {line_from_json(detail::member(l, lptr, keys[0]), detail::child(lptr, keys[0])),
            line_from_json(detail::member(l, lptr, keys[1]), detail::child(lptr, keys[1])),
            line_from_json(detail::member(l, lptr, keys[2]), detail::child(lptr, keys[2]))};
  }
  detail::array_of(l, lptr, 3);
  return {line_from_json(l[0], detail::child(lptr, 0)), line_from_json(l[1], detail::child(lptr, 1)),
          line_from_json(l[2], detail::child(lptr, 2))};
}

inline TriFrame frame_from_json(const json& j, const std::string& ptr = "") {
  auto [a, b, c] = three_lines_from_json(j, ptr, {"a", "b", "c"});
  try {
    return TriFrame(a, b, c);
  } catch (const GeometryError& e) {
    throw InputError(e.what(), detail::child(ptr, "lines"));
  }
}

/// A frame together with the same number of points on each of its lines.
struct FramedPoints {
  std::optional<TriFrame> frame;  // engaged after parsing
  std::vector<ProjPoint> on_a, on_b, on_c;
};

inline FramedPoints framed_points_from_json(const json& j, const std::string& ptr = "") {
  FramedPoints out;
  out.frame = frame_from_json(j, ptr);
  const std::string pptr = detail::child(ptr, "points");
  const json& p = detail::member(j, ptr, "points");
  out.on_a = points_from_json(detail::member(p, pptr, "a"), detail::child(pptr, "a"));
  out.on_b = points_from_json(detail::member(p, pptr, "b"), detail::child(pptr, "b"));
  out.on_c = points_from_json(detail::member(p, pptr, "c"), detail::child(pptr, "c"));
  if (out.on_b.size() != out.on_a.size() || out.on_c.size() != out.on_a.size() || out.on_a.size() < 2) {
    throw InputError("need the same number (at least two) of points on each line", pptr);
  }
  const std::array<std::pair<const std::vector<ProjPoint>*, const ProjLine*>, 3> groups{
      {{&out.on_a, &out.frame->a()}, {&out.on_b, &out.frame->b()}, {&out.on_c, &out.frame->c()}}};
  const char* names[] = {"a", "b", "c"};
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t i = 0; i < groups[g].first->size(); ++i) {
      if (!incident((*groups[g].first)[i], *groups[g].second)) {
        throw InputError(std::string("point is not on line ") + names[g],
                         detail::child(detail::child(pptr, names[g]), i));
      }
    }
  }
  return out;
}

inline NinePointConfig nine_point_from_json(const json& j, const std::string& ptr = "") {
  const FramedPoints fp = framed_points_from_json(j, ptr);
  if (fp.on_a.size() != 3) throw InputError("expected three points per line", detail::child(ptr, "points"));
  try {
    return NinePointConfig(*fp.frame, {fp.on_a[0], fp.on_a[1], fp.on_a[2]}, {fp.on_b[0], fp.on_b[1], fp.on_b[2]},
                           {fp.on_c[0], fp.on_c[1], fp.on_c[2]});
  } catch (const GeometryError& e) {
    throw InputError(e.what(), detail::child(ptr, "points"));
  }
}

inline HexConfig hexagon_from_json(const json& j, const std::string& ptr = "") {
  const auto pts = points_from_json(detail::member(j, ptr, "points"), detail::child(ptr, "points"), 6);
  try {
    return HexConfig({pts[0], pts[1], pts[2], pts[3], pts[4], pts[5]});
  } catch (const GeometryError& e) {
    throw InputError(e.what(), detail::child(ptr, "points"));
  }
}

inline MSVertexData ms_vertices_from_json(const json& j, const std::string& ptr = "") {
  const auto outer = points_from_json(detail::member(j, ptr, "outer"), detail::child(ptr, "outer"), 3);
  const auto inner = points_from_json(detail::member(j, ptr, "inner"), detail::child(ptr, "inner"), 3);
  return {outer[0], outer[1], outer[2], inner[0], inner[1], inner[2]};
}

inline MSConfig ms_config_from_json(const json& j, const std::string& ptr = "") {
  if (j.is_object() && j.contains("outer")) {
    try {
      return ms_config_from_vertices(ms_vertices_from_json(j, ptr));
    } catch (const GeometryError& e) {
      throw InputError(e.what(), ptr);
    }
  }
  const json& m = detail::member(j, ptr, "mu");
  if (!m.is_number_integer() || m.get<long long>() < 1 || m.get<long long>() > 32) {
    throw InputError("mu must be an integer in 1..32", detail::child(ptr, "mu"));
  }
  const int mu = m.get<int>();
  auto [u, v, w] = three_lines_from_json(j, ptr, {"u", "v", "w"});
  const std::string eptr = detail::child(ptr, "edges");
  const json& e = detail::array_of(detail::member(j, ptr, "edges"), eptr, 3 * static_cast<std::size_t>(mu) + 3);
  std::vector<EdgeCoeffs> edges;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string iptr = detail::child(eptr, i);
    detail::array_of(e[i], iptr, 2);
    edges.push_back({rational_from_json(e[i][0], detail::child(iptr, 0)),
                     rational_from_json(e[i][1], detail::child(iptr, 1))});
  }
  try {
    return MSConfig(mu, u, v, w, std::move(edges));
  } catch (const GeometryError& err) {
    throw InputError(err.what(), eptr);
  }
}

// ---- writing ---------------------------------------------------------------

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Triple& t) { return json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}); }

inline json to_json(const ProjPoint& p) { return to_json(p.coords()); }

inline json to_json(const ProjLine& l) { return json{{"line", to_json(l.coords())}}; }

inline json to_json(std::span<const ProjPoint> pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

inline json to_json(const HomCurve& c) {
  json coeffs = json::array();
  for (const auto& x : c.coefficients()) coeffs.push_back(to_json(x));
  return json{{"degree", c.degree()}, {"coefficients", coeffs}};
}

inline json frame_to_json(const TriFrame& f) {
  return json{{"lines", json{{"a", to_json(f.a())}, {"b", to_json(f.b())}, {"c", to_json(f.c())}}}};
}

inline json framed_points_to_json(const TriFrame& f, std::span<const ProjPoint> on_a, std::span<const ProjPoint> on_b,
                                  std::span<const ProjPoint> on_c) {
  json out = frame_to_json(f);
  out["points"] = json{{"a", to_json(on_a)}, {"b", to_json(on_b)}, {"c", to_json(on_c)}};
  return out;
}

inline json to_json(const NinePointConfig& cfg) {
  return framed_points_to_json(cfg.frame(), cfg.on_a(), cfg.on_b(), cfg.on_c());
}

inline json to_json(const HexConfig& h) { return json{{"points", to_json(std::span<const ProjPoint>(h.points()))}}; }

inline json to_json(const MSConfig& cfg) {
  json edges = json::array();
  for (const auto& e : cfg.edges()) edges.push_back(json::array({to_json(e.a), to_json(e.b)}));
  return json{{"mu", cfg.mu()},
              {"lines", json{{"u", to_json(cfg.u())}, {"v", to_json(cfg.v())}, {"w", to_json(cfg.w())}}},
              {"edges", edges}};
}

}  // namespace charnum::io
