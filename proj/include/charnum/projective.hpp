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

#include <charnum/rational.hpp>

#include <array>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace charnum {

/// Precondition violations on geometric input (coincident lines, points off a
/// line, degenerate frames, ...).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Triple = std::array<Rational, 3>;

inline Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rational dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Rational det3(const Triple& a, const Triple& b, const Triple& c) { return dot(a, cross(b, c)); }

inline bool is_zero(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

struct PointTag {};
struct LineTag {};

/// A nonzero coordinate triple taken up to scale. The stored triple is a fixed
/// representative: it is what linear combinations and decompositions see.
/// `operator==` compares projectively; `same_representative` compares exactly.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(Rational x, Rational y, Rational z) : c_{std::move(x), std::move(y), std::move(z)} { check(); }
  explicit Homogeneous(Triple coords) : c_(std::move(coords)) { check(); }

  [[nodiscard]] const Triple& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  /// Coprime integer representative, first nonzero entry positive.
  [[nodiscard]] Homogeneous canonical() const {
    Triple t = c_;
    make_primitive(t);
    return Homogeneous(std::move(t));
  }

  [[nodiscard]] Homogeneous scaled(const Rational& k) const {
    if (k.is_zero()) throw GeometryError("zero rescaling of a homogeneous representative");
    return Homogeneous(Triple{c_[0] * k, c_[1] * k, c_[2] * k});
  }

  [[nodiscard]] bool same_representative(const Homogeneous& o) const { return c_ == o.c_; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return is_zero(cross(a.c_, b.c_)); }

  /// Affine chart z = 1; only meaningful when the third coordinate is nonzero.
  [[nodiscard]] bool is_finite() const { return !c_[2].is_zero(); }

  [[nodiscard]] std::string str() const {
    constexpr bool point = std::is_same_v<Tag, PointTag>;
    return std::string(point ? "(" : "[") + c_[0].str() + "," + c_[1].str() + "," + c_[2].str() +
           (point ? ")" : "]");
  }

  friend std::ostream& operator<<(std::ostream& os, const Homogeneous& h) { return os << h.str(); }

 private:
  void check() const {
    if (is_zero(c_)) throw GeometryError("homogeneous coordinates must not all vanish");
  }

  Triple c_;
};

using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

/// a*p + b*q on the stored representatives.
template <class Tag>
Homogeneous<Tag> combine(const Rational& a, const Homogeneous<Tag>& p, const Rational& b,
                         const Homogeneous<Tag>& q) {
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) t[i] = a * p[i] + b * q[i];
  if (is_zero(t)) throw GeometryError("linear combination vanishes");
  return Homogeneous<Tag>(std::move(t));
}

inline bool incident(const ProjPoint& p, const ProjLine& l) { return dot(p.coords(), l.coords()).is_zero(); }

/// Common point of two distinct lines.
inline ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  Triple t = cross(l1.coords(), l2.coords());
  if (is_zero(t)) throw GeometryError("lines coincide");
  make_primitive(t);
  return ProjPoint(std::move(t));
}

/// Line through two distinct points.
inline ProjLine join(const ProjPoint& p1, const ProjPoint& p2) {
  Triple t = cross(p1.coords(), p2.coords());
  if (is_zero(t)) throw GeometryError("points coincide");
  make_primitive(t);
  return ProjLine(std::move(t));
}

inline bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return det3(p.coords(), q.coords(), r.coords()).is_zero();
}

inline bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  return det3(l.coords(), m.coords(), n.coords()).is_zero();
}

inline ProjLine dual(const ProjPoint& p) { return ProjLine(p.coords()); }
inline ProjPoint dual(const ProjLine& l) { return ProjPoint(l.coords()); }

/// A planar figure of points and lines.
struct Figure {
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
};

/// Swaps the roles of points and lines; an involution that preserves incidence.
inline Figure dualize(const Figure& f) {
  Figure d;
  d.points.reserve(f.lines.size());
  d.lines.reserve(f.points.size());
  for (const auto& l : f.lines) d.points.push_back(dual(l));
  for (const auto& p : f.points) d.lines.push_back(dual(p));
  return d;
}

/// Number of (point, line) pairs of the figure that are incident.
inline std::size_t incidence_count(const Figure& f) {
  std::size_t n = 0;
  for (const auto& p : f.points)
    for (const auto& l : f.lines) n += incident(p, l) ? 1 : 0;
  return n;
}

/// Coefficients (alpha, beta) with p equivalent to alpha*u + beta*v, kept as
/// coprime integers with the first nonzero entry positive.
struct Decomposition {
  Rational alpha;
  Rational beta;

  /// beta / alpha; throws when alpha is zero (p coincides with v).
  [[nodiscard]] Rational ratio() const {
    if (alpha.is_zero()) throw std::domain_error("division by zero");
    return beta / alpha;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Writes p in the pencil spanned by the representatives u and v. Works the
/// same way for points on a line and lines through a point.
template <class Tag>
Decomposition decompose(const Homogeneous<Tag>& p, const Homogeneous<Tag>& u, const Homogeneous<Tag>& v) {
  if (u == v) throw GeometryError("degenerate basis");
  static constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kRows{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [i, j] : kRows) {
    const Rational d = u[i] * v[j] - u[j] * v[i];
    if (d.is_zero()) continue;
    // Cramer on rows i, j of [u v] (alpha, beta)^T = p.
    std::array<Rational, 2> ab{(p[i] * v[j] - p[j] * v[i]) / d, (u[i] * p[j] - u[j] * p[i]) / d};
    const std::size_t k = 3 - i - j;
    if (ab[0] * u[k] + ab[1] * v[k] != p[k]) throw GeometryError("point off span");
    make_primitive(ab);
    return {ab[0], ab[1]};
  }
  throw GeometryError("degenerate basis");
}

/// Cross ratio a1*b2 / (a2*b1) of p1, p2 with respect to u, v. Unlike the
/// characteristic ratio it does not depend on the representatives chosen.
template <class Tag>
Rational cross_ratio(const Homogeneous<Tag>& u, const Homogeneous<Tag>& v, const Homogeneous<Tag>& p1,
                     const Homogeneous<Tag>& p2) {
  const auto d1 = decompose(p1, u, v);
  const auto d2 = decompose(p2, u, v);
  return (d1.alpha * d2.beta) / (d2.alpha * d1.beta);
}

/// Three lines without a common point, with vertex representatives
/// u = c x a, v = a x b, w = b x c.
class TriFrame {
 public:
  TriFrame(ProjLine a, ProjLine b, ProjLine c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), u_(vertex(c_, a_)), v_(vertex(a_, b_)),
        w_(vertex(b_, c_)) {
    if (a_ == b_ || b_ == c_ || c_ == a_) throw GeometryError("frame lines must be pairwise distinct");
    if (concurrent(a_, b_, c_)) throw GeometryError("frame lines have a common zero");
  }

  [[nodiscard]] const ProjLine& a() const { return a_; }
  [[nodiscard]] const ProjLine& b() const { return b_; }
  [[nodiscard]] const ProjLine& c() const { return c_; }
  [[nodiscard]] const ProjPoint& u() const { return u_; }
  [[nodiscard]] const ProjPoint& v() const { return v_; }
  [[nodiscard]] const ProjPoint& w() const { return w_; }

  /// Same frame, vertex representatives multiplied by the given factors.
  [[nodiscard]] TriFrame rescaled(const Rational& su, const Rational& sv, const Rational& sw) const {
    TriFrame f = *this;
    f.u_ = u_.scaled(su);
    f.v_ = v_.scaled(sv);
    f.w_ = w_.scaled(sw);
    return f;
  }

  /// Same frame with caller-chosen vertex representatives (each must be
  /// projectively equal to the canonical vertex it replaces).
  [[nodiscard]] TriFrame with_representatives(ProjPoint u, ProjPoint v, ProjPoint w) const {
    if (!(u == u_ && v == v_ && w == w_)) throw GeometryError("representative does not match frame vertex");
    TriFrame f = *this;
    f.u_ = std::move(u);
    f.v_ = std::move(v);
    f.w_ = std::move(w);
    return f;
  }

  /// True when p is one of the three vertices.
  [[nodiscard]] bool is_vertex(const ProjPoint& p) const { return p == u_ || p == v_ || p == w_; }

 private:
  static ProjPoint vertex(const ProjLine& l1, const ProjLine& l2) {
    Triple t = cross(l1.coords(), l2.coords());
    if (is_zero(t)) throw GeometryError("frame lines must be pairwise distinct");
    make_primitive(t);
    return ProjPoint(std::move(t));
  }

  ProjLine a_, b_, c_;
  ProjPoint u_, v_, w_;
};

}  // namespace charnum
