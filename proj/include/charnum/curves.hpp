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

#include <charnum/matrix.hpp>
#include <charnum/polynomial.hpp>
#include <charnum/projective.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charnum {

/// Plane algebraic curve P(x, y, z) = 0 of degree >= 1, P not identically zero.
class HomCurve {
 public:
  explicit HomCurve(HomPoly poly) : p_(std::move(poly)) {
    if (p_.degree() < 1) throw std::invalid_argument("curve degree must be at least 1");
    if (p_.is_zero()) throw std::invalid_argument("curve polynomial is identically zero");
  }
  HomCurve(int degree, std::vector<Rational> coeffs) : HomCurve(HomPoly(degree, std::move(coeffs))) {}

  static HomCurve line(const ProjLine& l) { return HomCurve(HomPoly::linear(l.coords())); }

  [[nodiscard]] int degree() const { return p_.degree(); }
  [[nodiscard]] const HomPoly& poly() const { return p_; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return p_.coefficients(); }

  [[nodiscard]] Rational operator()(const ProjPoint& p) const { return p_(p.coords()); }
  [[nodiscard]] bool contains(const ProjPoint& p) const { return p_(p.coords()).is_zero(); }

  /// Coprime integer coefficients, first nonzero positive.
  [[nodiscard]] HomCurve canonical() const {
    auto c = p_.coefficients();
    make_primitive(c);
    return HomCurve(degree(), std::move(c));
  }

  /// Same zero set: coefficient vectors proportional.
  [[nodiscard]] bool equivalent(const HomCurve& o) const { return canonical().p_ == o.canonical().p_; }

  friend HomCurve operator*(const HomCurve& a, const HomCurve& b) { return HomCurve(a.p_ * b.p_); }
  friend bool operator==(const HomCurve&, const HomCurve&) = default;

  [[nodiscard]] std::string str() const { return p_.str(); }

 private:
  HomPoly p_;
};

inline Rational evaluate(const HomCurve& c, const ProjPoint& p) { return c(p); }

/// g(s, t) = P(s u + t v). Identically zero iff the line through u, v is a
/// component of the curve.
inline BinaryForm restrict_to_line(const HomCurve& c, const ProjPoint& u, const ProjPoint& v) {
  if (u == v) throw GeometryError("degenerate basis");
  return restrict_poly(c.poly(), u.coords(), v.coords());
}

/// True when the line is a component of the curve.
inline bool has_component(const HomCurve& c, const ProjLine& l) {
  // Any two distinct points of l: the line meets at least two coordinate lines.
  std::vector<ProjPoint> pts;
  for (int k = 0; k < 3 && pts.size() < 2; ++k) {
    Triple axis{};
    axis[static_cast<std::size_t>(k)] = 1;
    const Triple t = cross(l.coords(), axis);
    if (is_zero(t)) continue;
    ProjPoint p(t);
    if (pts.empty() || !(pts.front() == p)) pts.push_back(p);
  }
  return restrict_to_line(c, pts[0], pts[1]).is_zero();
}

/// Value of a characteristic ratio: finite nonzero, zero (an intersection sits
/// at the first basis point) or infinite (at the second).
class CharRatioValue {
 public:
  enum class Kind { finite, zero_degenerate, infinite_degenerate };

  static CharRatioValue finite(Rational v) {
    if (v.is_zero()) return zero();
    return CharRatioValue(Kind::finite, std::move(v));
  }
  static CharRatioValue zero() { return CharRatioValue(Kind::zero_degenerate, Rational()); }
  static CharRatioValue infinite() { return CharRatioValue(Kind::infinite_degenerate, Rational()); }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_finite_nonzero() const { return kind_ == Kind::finite; }

  /// The rational value; throws for the infinite symbol.
  [[nodiscard]] const Rational& value() const {
    if (kind_ == Kind::infinite_degenerate) throw std::domain_error("characteristic ratio is infinite");
    return value_;
  }

  [[nodiscard]] std::string str() const {
    switch (kind_) {
      case Kind::zero_degenerate: return "ZERO_DEGENERATE";
      case Kind::infinite_degenerate: return "INFINITE_DEGENERATE";
      case Kind::finite: break;
    }
    return value_.str();
  }

  friend bool operator==(const CharRatioValue&, const CharRatioValue&) = default;

 private:
  CharRatioValue(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

struct WeightedPoint {
  ProjPoint point;
  int multiplicity = 1;
};

/// Product of beta/alpha over the decompositions p = alpha u + beta v on the
/// given representatives, each factor raised to its multiplicity.
inline CharRatioValue char_ratio_points(const ProjPoint& u, const ProjPoint& v, std::span<const WeightedPoint> points) {
  Rational product = 1;
  bool at_u = false;
  bool at_v = false;
  for (const auto& [p, mult] : points) {
    if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
    // Decomposition on the raw representatives: the canonical scaling of
    // (alpha, beta) does not change beta/alpha.
    const Decomposition d = decompose(p, u, v);
    if (d.beta.is_zero()) {
      at_u = true;
    } else if (d.alpha.is_zero()) {
      at_v = true;
    } else {
      product *= pow(d.beta / d.alpha, static_cast<unsigned>(mult));
    }
  }
  if (at_u && at_v) throw GeometryError("indeterminate characteristic ratio: points at both basis points");
  if (at_u) return CharRatioValue::zero();
  if (at_v) return CharRatioValue::infinite();
  return CharRatioValue::finite(product);
}

inline CharRatioValue char_ratio_points(const ProjPoint& u, const ProjPoint& v, std::span<const ProjPoint> points) {
  std::vector<WeightedPoint> w;
  w.reserve(points.size());
  for (const auto& p : points) w.push_back({p, 1});
  return char_ratio_points(u, v, std::span<const WeightedPoint>(w));
}

/// Characteristic ratio of the intersections of the curve with the line
/// through u and v, from the endpoint identity (-1)^n P(u) / P(v).
inline CharRatioValue char_ratio_curve_line(const HomCurve& c, const ProjPoint& u, const ProjPoint& v) {
  if (restrict_to_line(c, u, v).is_zero()) throw GeometryError("line component");
  const Rational pu = c(u);
  const Rational pv = c(v);
  if (pu.is_zero() && pv.is_zero()) throw GeometryError("indeterminate characteristic ratio: both basis points on curve");
  if (pu.is_zero()) return CharRatioValue::zero();
  if (pv.is_zero()) return CharRatioValue::infinite();
  Rational r = pu / pv;
  if (c.degree() % 2 != 0) r = -r;
  return CharRatioValue::finite(std::move(r));
}

/// Cyclic product [u,v; C.a] [v,w; C.b] [w,u; C.c] of characteristic ratios.
inline Rational char_number(const HomCurve& c, const TriFrame& frame) {
  for (const ProjLine* l : {&frame.a(), &frame.b(), &frame.c()}) {
    if (has_component(c, *l)) throw GeometryError("line component");
  }
  if (c.contains(frame.u()) || c.contains(frame.v()) || c.contains(frame.w())) {
    throw GeometryError("vertex on curve");
  }
  const auto ra = char_ratio_curve_line(c, frame.u(), frame.v());
  const auto rb = char_ratio_curve_line(c, frame.v(), frame.w());
  const auto rc = char_ratio_curve_line(c, frame.w(), frame.u());
  return ra.value() * rb.value() * rc.value();
}

/// Rows: points; columns: degree-d monomials evaluated at each representative.
inline RatMatrix monomial_evaluation_matrix(std::span<const ProjPoint> points, int degree) {
  const auto mons = monomials(degree);
  RatMatrix m(points.size(), mons.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < mons.size(); ++c) m(r, c) = evaluate_monomial(mons[c], points[r].coords());
  return m;
}

/// Basis of the degree-d curves through all points (deterministic order).
inline std::vector<HomCurve> fit_curves(std::span<const ProjPoint> points, int degree) {
  if (degree < 1) throw std::invalid_argument("curve degree must be at least 1");
  std::vector<HomCurve> out;
  for (auto& v : nullspace(monomial_evaluation_matrix(points, degree))) out.emplace_back(degree, std::move(v));
  return out;
}

/// A degree-d curve through the points that passes through none of the frame
/// vertices (so none of the frame lines is a component), if one exists.
inline std::optional<HomCurve> fit_frame_curve(const TriFrame& frame, std::span<const ProjPoint> points, int degree) {
  const auto basis = fit_curves(points, degree);
  if (basis.empty()) return std::nullopt;
  const std::array<const ProjPoint*, 3> vertices{&frame.u(), &frame.v(), &frame.w()};
  for (const auto* vtx : vertices) {
    const bool all_vanish = std::all_of(basis.begin(), basis.end(), [&](const HomCurve& b) { return b.contains(*vtx); });
    if (all_vanish) return std::nullopt;
  }
  // Each vertex functional is nonzero on the span, so some point on the
  // moment curve (1, k, k^2, ...) of coefficients avoids all three zero sets.
  for (long k = 0;; ++k) {
    HomPoly acc(degree);
    Rational weight = 1;
    for (const auto& b : basis) {
      acc = acc + b.poly().scaled(weight);
      weight *= k;
    }
    if (acc.is_zero()) continue;
    HomCurve candidate(std::move(acc));
    if (!candidate.contains(frame.u()) && !candidate.contains(frame.v()) && !candidate.contains(frame.w())) {
      return candidate.canonical();
    }
  }
}

inline Rational determinant_of_conic_condition(std::span<const ProjPoint> six) {
  return determinant(monomial_evaluation_matrix(six, 2));
}

/// Whether six points lie on a common conic. When the pairs (p1,p2), (p3,p4),
/// (p5,p6) span a frame and no point is a vertex, the ratio-product criterion
/// is evaluated as well and must agree.
inline bool conic_through_six(std::span<const ProjPoint> six) {
  if (six.size() != 6) throw std::invalid_argument("conic_through_six needs exactly six points");
  const bool by_determinant = determinant_of_conic_condition(six).is_zero();

  if (six[0] == six[1] || six[2] == six[3] || six[4] == six[5]) return by_determinant;
  const ProjLine a = join(six[0], six[1]);
  const ProjLine b = join(six[2], six[3]);
  const ProjLine c = join(six[4], six[5]);
  if (a == b || b == c || c == a || concurrent(a, b, c)) return by_determinant;
  const TriFrame frame(a, b, c);
  for (const auto& p : six) {
    if (frame.is_vertex(p)) return by_determinant;
  }
  const std::array<ProjPoint, 2> on_a{six[0], six[1]};
  const std::array<ProjPoint, 2> on_b{six[2], six[3]};
  const std::array<ProjPoint, 2> on_c{six[4], six[5]};
  const Rational product = char_ratio_points(frame.u(), frame.v(), std::span<const ProjPoint>(on_a)).value() *
                           char_ratio_points(frame.v(), frame.w(), std::span<const ProjPoint>(on_b)).value() *
                           char_ratio_points(frame.w(), frame.u(), std::span<const ProjPoint>(on_c)).value();
  const bool by_product = product == 1;
  if (by_product != by_determinant) throw std::logic_error("conic criteria disagree");
  return by_determinant;
}

inline Triple gradient(const HomCurve& c, const ProjPoint& p) {
  return {c.poly().derivative(0)(p.coords()), c.poly().derivative(1)(p.coords()), c.poly().derivative(2)(p.coords())};
}

/// Tangent line at a smooth point of the curve.
inline ProjLine tangent_line(const HomCurve& c, const ProjPoint& p) {
  if (!c.contains(p)) throw GeometryError("point not on curve");
  Triple g = gradient(c, p);
  if (is_zero(g)) throw GeometryError("singular point");
  make_primitive(g);
  return ProjLine(std::move(g));
}

inline Rational hessian_determinant(const HomCurve& c, const ProjPoint& p) {
  std::array<HomPoly, 3> first{c.poly().derivative(0), c.poly().derivative(1), c.poly().derivative(2)};
  std::array<Triple, 3> h;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h[i][j] = first[i].derivative(static_cast<int>(j))(p.coords());
  return det3(h[0], h[1], h[2]);
}

/// Smooth point where the Hessian determinant vanishes.
inline bool is_flex(const HomCurve& c, const ProjPoint& p) {
  (void)tangent_line(c, p);  // on-curve and smoothness preconditions
  return hessian_determinant(c, p).is_zero();
}

namespace detail {

/// A point on l different from p.
inline ProjPoint other_point_on(const ProjLine& l, const ProjPoint& p) {
  for (int k = 0; k < 3; ++k) {
    Triple axis{};
    axis[static_cast<std::size_t>(k)] = 1;
    const Triple t = cross(l.coords(), axis);
    if (is_zero(t)) continue;
    ProjPoint q(t);
    if (!(q == p)) return q;
  }
  throw std::logic_error("line has fewer than two points");
}

/// The single root (s:t) of a nonzero linear binary form, as the point s u + t v.
inline ProjPoint linear_root(const BinaryForm& g, const ProjPoint& u, const ProjPoint& v) {
  if (g.degree() != 1 || g.is_zero()) throw std::logic_error("expected a nonzero linear form");
  // g = c0 s + c1 t vanishes at (s:t) = (c1 : -c0).
  return combine(g[1], u, -g[0], v).canonical();
}

}  // namespace detail

/// Third intersection of a cubic with the line through two of its points
/// (the points may coincide in the sense of a repeated root only if passed as
/// distinct representatives of distinct points).
inline ProjPoint third_intersection(const HomCurve& c, const ProjPoint& p1, const ProjPoint& p2) {
  if (c.degree() != 3) throw std::invalid_argument("third intersection needs a cubic");
  if (!c.contains(p1) || !c.contains(p2)) throw GeometryError("point not on curve");
  const auto g = restrict_to_line(c, p1, p2);
  if (g.is_zero()) throw GeometryError("line component");
  // Roots (1:0) at p1 and (0:1) at p2.
  return detail::linear_root(g.divide_root(1, 0).divide_root(0, 1), p1, p2);
}

/// Residual intersection of the tangent at p with a cubic (p itself at a flex).
inline ProjPoint tangent_residual(const HomCurve& c, const ProjPoint& p) {
  if (c.degree() != 3) throw std::invalid_argument("tangent residual needs a cubic");
  const ProjLine t = tangent_line(c, p);
  const ProjPoint q = detail::other_point_on(t, p);
  const auto g = restrict_to_line(c, p, q);
  if (g.is_zero()) throw GeometryError("tangent line is a component of the curve");
  return detail::linear_root(g.divide_root(1, 0).divide_root(1, 0), p, q);
}

}  // namespace charnum
