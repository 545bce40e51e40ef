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
#include <charnum/projective.hpp>

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charnum {

/// Characteristic mapping on the line through u, v: q = alpha u + beta v is
/// sent to beta u + alpha v, so that [u,v; q, image] = 1.
inline ProjPoint char_map(const ProjPoint& q, const ProjPoint& u, const ProjPoint& v) {
  const Decomposition d = decompose(q, u, v);
  if (d.alpha.is_zero() || d.beta.is_zero()) throw GeometryError("basis point has no finite image");
  return combine(d.beta, u, d.alpha, v).canonical();
}

namespace detail {

inline bool any_three_collinear(std::span<const ProjPoint> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (collinear(pts[i], pts[j], pts[k])) return true;
  return false;
}

}  // namespace detail

/// Ordered hexagon p1..p6 with no three vertices collinear, together with
/// u = <(p1,p2),(p5,p6)>, v = <(p1,p2),(p3,p4)>, w = <(p3,p4),(p5,p6)>.
class HexConfig {
 public:
  explicit HexConfig(std::array<ProjPoint, 6> points) : p_(std::move(points)) {
    if (detail::any_three_collinear(p_)) throw GeometryError("three hexagon points are collinear");
    const ProjLine l12 = join(p_[0], p_[1]);
    const ProjLine l34 = join(p_[2], p_[3]);
    const ProjLine l56 = join(p_[4], p_[5]);
    u_ = meet(l12, l56);
    v_ = meet(l12, l34);
    w_ = meet(l34, l56);
  }

  [[nodiscard]] const std::array<ProjPoint, 6>& points() const { return p_; }
  [[nodiscard]] const ProjPoint& point(std::size_t i) const { return p_[i]; }
  [[nodiscard]] const ProjPoint& u() const { return *u_; }
  [[nodiscard]] const ProjPoint& v() const { return *v_; }
  [[nodiscard]] const ProjPoint& w() const { return *w_; }

  /// Same hexagon with caller-chosen representatives of u, v, w.
  [[nodiscard]] HexConfig with_representatives(ProjPoint u, ProjPoint v, ProjPoint w) const {
    if (!(u == *u_ && v == *v_ && w == *w_)) throw GeometryError("representative does not match hexagon vertex");
    HexConfig h = *this;
    h.u_ = std::move(u);
    h.v_ = std::move(v);
    h.w_ = std::move(w);
    return h;
  }

 private:
  std::array<ProjPoint, 6> p_;
  // Always engaged after construction; optional only because ProjPoint has no
  // default value.
  std::optional<ProjPoint> u_, v_, w_;
};

/// Intersections of opposite sides: q1 = <(p1,p2),(p4,p5)>,
/// q2 = <(p2,p3),(p5,p6)>, q3 = <(p3,p4),(p6,p1)>.
inline std::array<ProjPoint, 3> phi_hexagon(const HexConfig& hex) {
  const auto& p = hex.points();
  auto side_meet = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const ProjLine s1 = join(p[i], p[j]);
    const ProjLine s2 = join(p[k], p[l]);
    if (s1 == s2) throw GeometryError("opposite sides coincide");
    return meet(s1, s2);
  };
  return {side_meet(0, 1, 3, 4), side_meet(1, 2, 4, 5), side_meet(2, 3, 5, 0)};
}

/// Pascal mapping: (chi_(u,v)(q1), chi_(w,u)(q2), chi_(v,w)(q3)).
inline std::array<ProjPoint, 3> pascal_mapping(const HexConfig& hex) {
  const auto q = phi_hexagon(hex);
  return {char_map(q[0], hex.u(), hex.v()), char_map(q[1], hex.w(), hex.u()), char_map(q[2], hex.v(), hex.w())};
}

/// Pascal's theorem in characteristic-mapping form: true iff the images of the
/// Pascal mapping are collinear. For hexagons inscribed in a conic the
/// ratio-product identity is cross-checked as well.
inline bool verify_pascal(const HexConfig& hex) {
  const auto chi = pascal_mapping(hex);
  const bool on_line = collinear(chi[0], chi[1], chi[2]);
  if (conic_through_six(hex.points())) {
    const auto& p = hex.points();
    // -(b1 b6 / a1 a6) (b2 b3 / a2 a3) (b4 b5 / a4 a5), with p1, p2 over (u, v),
    // p3, p4 over (v, w) and p5, p6 over (w, u).
    auto r = [&](std::size_t i, const ProjPoint& a, const ProjPoint& b) { return decompose(p[i], a, b).ratio(); };
    const Rational product = -(r(0, hex.u(), hex.v()) * r(5, hex.w(), hex.u())) *
                             -(r(1, hex.u(), hex.v()) * r(2, hex.v(), hex.w())) *
                             -(r(3, hex.v(), hex.w()) * r(4, hex.w(), hex.u()));
    if (product != -1 || !on_line) throw std::logic_error("Pascal identity violated on an inscribed hexagon");
  }
  return on_line;
}

/// Nine points on a frame, three per line, labelled {p1,p2,p7} on a,
/// {p3,p4,p8} on b and {p5,p6,p9} on c.
class NinePointConfig {
 public:
  NinePointConfig(TriFrame frame, std::array<ProjPoint, 3> on_a, std::array<ProjPoint, 3> on_b,
                  std::array<ProjPoint, 3> on_c)
      : frame_(std::move(frame)), a_(std::move(on_a)), b_(std::move(on_b)), c_(std::move(on_c)) {
    auto check = [&](const std::array<ProjPoint, 3>& pts, const ProjLine& l, const char* name) {
      for (const auto& p : pts) {
        if (!incident(p, l)) throw GeometryError(std::string("point ") + p.str() + " is not on line " + name);
        if (frame_.is_vertex(p)) throw GeometryError(std::string("point ") + p.str() + " is a frame vertex");
      }
    };
    check(a_, frame_.a(), "a");
    check(b_, frame_.b(), "b");
    check(c_, frame_.c(), "c");
    const auto six = hexagon_points();
    if (detail::any_three_collinear(six)) throw GeometryError("three of p1..p6 are collinear");
  }

  [[nodiscard]] const TriFrame& frame() const { return frame_; }
  [[nodiscard]] const std::array<ProjPoint, 3>& on_a() const { return a_; }
  [[nodiscard]] const std::array<ProjPoint, 3>& on_b() const { return b_; }
  [[nodiscard]] const std::array<ProjPoint, 3>& on_c() const { return c_; }

  /// p_i for i = 1..9.
  [[nodiscard]] const ProjPoint& p(int i) const {
    switch (i) {
      case 1: return a_[0];
      case 2: return a_[1];
      case 7: return a_[2];
      case 3: return b_[0];
      case 4: return b_[1];
      case 8: return b_[2];
      case 5: return c_[0];
      case 6: return c_[1];
      case 9: return c_[2];
      default: throw std::out_of_range("point index must be in 1..9");
    }
  }

  [[nodiscard]] std::array<ProjPoint, 6> hexagon_points() const { return {a_[0], a_[1], b_[0], b_[1], c_[0], c_[1]}; }
  [[nodiscard]] std::array<ProjPoint, 9> all_points() const {
    return {a_[0], a_[1], a_[2], b_[0], b_[1], b_[2], c_[0], c_[1], c_[2]};
  }

  [[nodiscard]] NinePointConfig with_frame(TriFrame f) const { return {std::move(f), a_, b_, c_}; }

 private:
  TriFrame frame_;
  std::array<ProjPoint, 3> a_, b_, c_;
};

/// [u,v; points on a] [v,w; points on b] [w,u; points on c].
inline Rational frame_ratio_product(const TriFrame& f, std::span<const ProjPoint> on_a, std::span<const ProjPoint> on_b,
                                    std::span<const ProjPoint> on_c) {
  return char_ratio_points(f.u(), f.v(), on_a).value() * char_ratio_points(f.v(), f.w(), on_b).value() *
         char_ratio_points(f.w(), f.u(), on_c).value();
}

inline Rational cubic_ratio_product(const NinePointConfig& cfg) {
  return frame_ratio_product(cfg.frame(), cfg.on_a(), cfg.on_b(), cfg.on_c());
}

/// Raised when the nine points fail the cubic product criterion.
class NotOnCubicError : public GeometryError {
 public:
  explicit NotOnCubicError(Rational product)
      : GeometryError("points not on a cubic (ratio product " + product.str() + ", expected -1)"),
        product_(std::move(product)) {}
  [[nodiscard]] const Rational& product() const { return product_; }

 private:
  Rational product_;
};

struct PascalCubicResult {
  /// chi_(u,v)(q1), chi_(w,u)(q2), chi_(v,w)(q3), p7, p8, p9.
  std::array<ProjPoint, 6> points;
  std::optional<HomCurve> conic;
};

/// Pascal-type theorem for cubics: the Pascal mapping of p1..p6 together with
/// p7, p8, p9 lies on a conic.
inline PascalCubicResult pascal_type_cubic(const NinePointConfig& cfg) {
  const Rational product = cubic_ratio_product(cfg);
  if (product != -1) throw NotOnCubicError(product);
  const auto& f = cfg.frame();
  const HexConfig hex = HexConfig(cfg.hexagon_points()).with_representatives(f.u(), f.v(), f.w());
  const auto chi = pascal_mapping(hex);
  PascalCubicResult out{{chi[0], chi[1], chi[2], cfg.p(7), cfg.p(8), cfg.p(9)}, std::nullopt};
  auto conics = fit_curves(out.points, 2);
  if (!conics.empty()) out.conic = std::move(conics.front());
  return out;
}

struct PascalGeneralResult {
  /// Pascal-mapped points followed by the remaining input points, grouped by
  /// line: on a: chi1, a[2..]; on b: chi3, b[2..]; on c: chi2, c[2..].
  std::vector<ProjPoint> points;
  std::vector<ProjPoint> on_a, on_b, on_c;
  std::optional<HomCurve> curve;  // degree n-1, through none of the vertices
  bool input_criterion = false;   // ratio product of the 3n inputs == (-1)^n
  bool output_criterion = false;  // ratio product of the outputs == (-1)^(n-1)
};

/// Pascal-type theorem for degree n. The first two points listed on each line
/// form the hexagon; the rest are carried over unchanged.
inline PascalGeneralResult pascal_type_general(const TriFrame& frame, std::span<const ProjPoint> on_a,
                                               std::span<const ProjPoint> on_b, std::span<const ProjPoint> on_c,
                                               int n) {
  if (n < 2) throw std::invalid_argument("degree must be at least 2");
  const auto count = static_cast<std::size_t>(n);
  if (on_a.size() != count || on_b.size() != count || on_c.size() != count) {
    throw std::invalid_argument("need exactly n points on each frame line");
  }
  auto check = [&](std::span<const ProjPoint> pts, const ProjLine& l) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!incident(pts[i], l)) throw GeometryError("point " + pts[i].str() + " is not on its frame line");
      if (frame.is_vertex(pts[i])) throw GeometryError("point " + pts[i].str() + " is a frame vertex");
      for (std::size_t j = 0; j < i; ++j)
        if (pts[i] == pts[j]) throw GeometryError("repeated point " + pts[i].str());
    }
  };
  check(on_a, frame.a());
  check(on_b, frame.b());
  check(on_c, frame.c());

  const std::array<ProjPoint, 6> six{on_a[0], on_a[1], on_b[0], on_b[1], on_c[0], on_c[1]};
  if (detail::any_three_collinear(six)) throw GeometryError("pick different six");
  const auto chi = pascal_mapping(HexConfig(six).with_representatives(frame.u(), frame.v(), frame.w()));

  PascalGeneralResult out;
  out.on_a.push_back(chi[0]);
  out.on_c.push_back(chi[1]);
  out.on_b.push_back(chi[2]);
  out.on_a.insert(out.on_a.end(), on_a.begin() + 2, on_a.end());
  out.on_b.insert(out.on_b.end(), on_b.begin() + 2, on_b.end());
  out.on_c.insert(out.on_c.end(), on_c.begin() + 2, on_c.end());
  out.points = {chi[0], chi[1], chi[2]};
  out.points.insert(out.points.end(), on_a.begin() + 2, on_a.end());
  out.points.insert(out.points.end(), on_b.begin() + 2, on_b.end());
  out.points.insert(out.points.end(), on_c.begin() + 2, on_c.end());
  for (const auto* group : {&out.on_a, &out.on_b, &out.on_c}) {
    for (std::size_t i = 0; i < group->size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*group)[i] == (*group)[j]) throw GeometryError("Pascal image coincides with a carried point");
  }

  const Rational sign_n = n % 2 == 0 ? 1 : -1;
  out.input_criterion = frame_ratio_product(frame, on_a, on_b, on_c) == sign_n;
  out.output_criterion = frame_ratio_product(frame, out.on_a, out.on_b, out.on_c) == -sign_n;
  if (out.input_criterion != out.output_criterion) throw std::logic_error("Pascal-type biconditional violated");
  out.curve = fit_frame_curve(frame, out.points, n - 1);
  return out;
}

/// Line cutting a cubic in three points: the residual intersections of the
/// tangents at those points are collinear.
inline bool residual_tangent_collinear(const HomCurve& c, const ProjLine& l, std::span<const ProjPoint> ps) {
  if (c.degree() != 3) throw std::invalid_argument("expected a cubic");
  if (ps.size() != 3) throw std::invalid_argument("expected three points");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!incident(ps[i], l)) throw GeometryError("point " + ps[i].str() + " is not on the line");
    for (std::size_t j = 0; j < i; ++j)
      if (ps[i] == ps[j]) throw GeometryError("points must be distinct");
  }
  const std::array<ProjPoint, 3> r{tangent_residual(c, ps[0]), tangent_residual(c, ps[1]), tangent_residual(c, ps[2])};
  return collinear(r[0], r[1], r[2]);
}

/// Three flexes of a cubic; true iff collinear.
inline bool flexes_collinear(const HomCurve& c, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  if (c.degree() != 3) throw std::invalid_argument("expected a cubic");
  for (const auto* p : {&p1, &p2, &p3}) {
    if (!is_flex(c, *p)) throw GeometryError("point " + p->str() + " is not a flex");
  }
  return collinear(p1, p2, p3);
}

/// Nondegenerate conic: the symmetric coefficient matrix is invertible.
inline bool is_nondegenerate_conic(const HomCurve& d) {
  if (d.degree() != 2) return false;
  const auto& k = d.coefficients();  // xx, xy, xz, yy, yz, zz
  const Rational h = Rational(1, 2);
  const Triple r0{k[0], k[1] * h, k[2] * h};
  const Triple r1{k[1] * h, k[3], k[4] * h};
  const Triple r2{k[2] * h, k[4] * h, k[5]};
  return !det3(r0, r1, r2).is_zero();
}

/// Conic tangent to a cubic at three distinct points: the residual
/// intersections of the common tangents with the cubic are collinear.
inline bool conic_tangency_residuals_collinear(const HomCurve& c, const HomCurve& d, std::span<const ProjPoint> ps) {
  if (c.degree() != 3) throw std::invalid_argument("expected a cubic");
  if (!is_nondegenerate_conic(d)) throw GeometryError("degenerate conic");
  if (ps.size() != 3) throw std::invalid_argument("expected three points");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (ps[i] == ps[j]) throw GeometryError("points must be distinct");
    if (!c.contains(ps[i]) || !d.contains(ps[i])) throw GeometryError("not a tangential contact");
    const Triple gc = gradient(c, ps[i]);
    const Triple gd = gradient(d, ps[i]);
    if (is_zero(gc) || !is_zero(cross(gc, gd))) throw GeometryError("not a tangential contact");
  }
  const std::array<ProjPoint, 3> r{tangent_residual(c, ps[0]), tangent_residual(c, ps[1]), tangent_residual(c, ps[2])};
  return collinear(r[0], r[1], r[2]);
}

}  // namespace charnum
