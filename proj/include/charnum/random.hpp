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

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

// Seeded generators for random configurations. Every function draws only from
// the engine it is given, so a seed reproduces a whole batch.

namespace charnum::gen {

using Engine = std::mt19937_64;

inline long uniform(Engine& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// p/q with |p| <= bound and 1 <= q <= max_den.
inline Rational rational(Engine& rng, long bound = 9, long max_den = 4) {
  return Rational(uniform(rng, -bound, bound), uniform(rng, 1, max_den));
}

inline Rational nonzero_rational(Engine& rng, long bound = 9, long max_den = 4) {
  for (;;) {
    Rational r = rational(rng, bound, max_den);
    if (!r.is_zero()) return r;
  }
}

inline Triple triple(Engine& rng, long bound = 9, long max_den = 4) {
  for (;;) {
    Triple t{rational(rng, bound, max_den), rational(rng, bound, max_den), rational(rng, bound, max_den)};
    if (!is_zero(t)) return t;
  }
}

inline ProjPoint point(Engine& rng, long bound = 9) { return ProjPoint(triple(rng, bound)); }
inline ProjLine line(Engine& rng, long bound = 9) { return ProjLine(triple(rng, bound)); }

/// Random frame; retries until the three lines are valid.
inline TriFrame frame(Engine& rng, long bound = 6) {
  for (;;) {
    try {
      return TriFrame(line(rng, bound), line(rng, bound), line(rng, bound));
    } catch (const GeometryError&) {
    }
  }
}

/// Curve of the given degree with random small coefficients.
inline HomCurve curve(Engine& rng, int degree, long bound = 9) {
  for (;;) {
    std::vector<Rational> c(monomial_count(degree));
    for (auto& x : c) x = rational(rng, bound, 3);
    HomPoly p(degree, std::move(c));
    if (!p.is_zero()) return HomCurve(std::move(p));
  }
}

/// Curve that contains none of the frame lines and none of its vertices.
inline HomCurve frame_curve(Engine& rng, int degree, const TriFrame& f) {
  for (;;) {
    HomCurve c = curve(rng, degree);
    if (c.contains(f.u()) || c.contains(f.v()) || c.contains(f.w())) continue;
    if (has_component(c, f.a()) || has_component(c, f.b()) || has_component(c, f.c())) continue;
    return c;
  }
}

/// alpha*p + beta*q with both coefficients nonzero.
inline ProjPoint on_pencil(Engine& rng, const ProjPoint& p, const ProjPoint& q) {
  return combine(nonzero_rational(rng), p, nonzero_rational(rng), q).canonical();
}

/// Random invertible 3x3 rational matrix, rows as triples.
inline std::array<Triple, 3> invertible(Engine& rng, long bound = 5) {
  for (;;) {
    std::array<Triple, 3> m{triple(rng, bound, 1), triple(rng, bound, 1), triple(rng, bound, 1)};
    if (!det3(m[0], m[1], m[2]).is_zero()) return m;
  }
}

inline Triple apply(const std::array<Triple, 3>& m, const Triple& x) { return {dot(m[0], x), dot(m[1], x), dot(m[2], x)}; }

/// A random rational conic, given by the image of x^2 + y^2 - z^2 under a
/// random projective map, together with a way to sample rational points.
struct ConicSampler {
  std::array<Triple, 3> map;

  /// The point image of (1 - t^2, 2t, 1 + t^2) with t = p/q.
  [[nodiscard]] ProjPoint at(const Rational& t) const {
    const Triple x{1 - t * t, 2 * t, 1 + t * t};
    return ProjPoint(apply(map, x)).canonical();
  }

  /// Implicit equation of the image conic.
  [[nodiscard]] HomCurve curve() const {
    std::vector<ProjPoint> pts;
    for (long k = 0; k < 5; ++k) pts.push_back(at(Rational(k)));
    return fit_curves(pts, 2).front();
  }
};

inline ConicSampler conic(Engine& rng) { return {invertible(rng)}; }

/// Six distinct rational points on a random conic (no three are collinear).
inline std::array<ProjPoint, 6> conic_hexagon(Engine& rng) {
  const ConicSampler s = conic(rng);
  for (;;) {
    std::vector<Rational> ts;
    while (ts.size() < 6) {
      Rational t = rational(rng, 12, 5);
      bool fresh = true;
      for (const auto& x : ts) fresh = fresh && x != t;
      if (fresh) ts.push_back(t);
    }
    std::array<ProjPoint, 6> pts{s.at(ts[0]), s.at(ts[1]), s.at(ts[2]), s.at(ts[3]), s.at(ts[4]), s.at(ts[5])};
    try {
      HexConfig h(pts);
      (void)phi_hexagon(h);
      (void)pascal_mapping(h);
      return pts;
    } catch (const GeometryError&) {
    }
  }
}

/// Six points not on a common conic, no three collinear.
inline std::array<ProjPoint, 6> generic_hexagon(Engine& rng) {
  for (;;) {
    std::array<ProjPoint, 6> pts{point(rng), point(rng), point(rng), point(rng), point(rng), point(rng)};
    if (conic_through_six(pts)) continue;
    try {
      HexConfig h(pts);
      (void)pascal_mapping(h);
      return pts;
    } catch (const GeometryError&) {
    }
  }
}

/// Points listed per frame line, n on each.
struct FramePoints {
  std::vector<ProjPoint> on_a, on_b, on_c;
};

namespace detail {

inline bool distinct_from(const std::vector<ProjPoint>& pts, const ProjPoint& p) {
  for (const auto& q : pts)
    if (q == p) return false;
  return true;
}

}  // namespace detail

/// n random non-vertex points on each line. When `target` is set, the last
/// point on c is solved for so that the cyclic ratio product equals it.
inline FramePoints frame_points(Engine& rng, const TriFrame& f, int n, const Rational* target = nullptr) {
  for (;;) {
    FramePoints fp;
    auto fill = [&](std::vector<ProjPoint>& out, const ProjPoint& p, const ProjPoint& q, int count) {
      while (static_cast<int>(out.size()) < count) {
        ProjPoint x = on_pencil(rng, p, q);
        if (detail::distinct_from(out, x)) out.push_back(std::move(x));
      }
    };
    fill(fp.on_a, f.u(), f.v(), n);
    fill(fp.on_b, f.v(), f.w(), n);
    fill(fp.on_c, f.w(), f.u(), target ? n - 1 : n);
    if (target) {
      const Rational partial = char_ratio_points(f.u(), f.v(), std::span<const ProjPoint>(fp.on_a)).value() *
                               char_ratio_points(f.v(), f.w(), std::span<const ProjPoint>(fp.on_b)).value() *
                               char_ratio_points(f.w(), f.u(), std::span<const ProjPoint>(fp.on_c)).value();
      // Last point: w + r*u, ratio r.
      const Rational r = *target / partial;
      ProjPoint last = combine(Rational(1), f.w(), r, f.u()).canonical();
      if (!detail::distinct_from(fp.on_c, last)) continue;
      fp.on_c.push_back(std::move(last));
    }
    return fp;
  }
}

/// Nine-point configuration on a random frame. With `on_cubic` the points
/// satisfy the cubic product criterion; otherwise they are unconstrained.
inline NinePointConfig nine_points(Engine& rng, bool on_cubic) {
  const Rational minus_one = -1;
  for (;;) {
    TriFrame f = frame(rng);
    FramePoints fp = frame_points(rng, f, 3, on_cubic ? &minus_one : nullptr);
    try {
      return NinePointConfig(f, {fp.on_a[0], fp.on_a[1], fp.on_a[2]}, {fp.on_b[0], fp.on_b[1], fp.on_b[2]},
                             {fp.on_c[0], fp.on_c[1], fp.on_c[2]});
    } catch (const GeometryError&) {
    }
  }
}

/// Random Morgan-Scott type configuration of smoothness mu on a random
/// triangle. With `singular` the last edge is solved for so that the pencil
/// product equals (-1)^(mu+1).
inline MSConfig ms_config(Engine& rng, int mu, bool singular) {
  const std::size_t count = 3 * static_cast<std::size_t>(mu) + 3;
  for (;;) {
    TriFrame f = frame(rng);
    std::vector<EdgeCoeffs> edges(count);
    Rational product = 1;
    for (std::size_t i = 0; i < count; ++i) {
      edges[i] = {nonzero_rational(rng), nonzero_rational(rng)};
      if (i + 1 < count) product *= edges[i].a / edges[i].b;
    }
    if (singular) {
      const Rational want = mu % 2 == 0 ? -1 : 1;
      edges.back() = {want / product, 1};
    }
    try {
      return MSConfig(mu, dual(f.u()), dual(f.v()), dual(f.w()), std::move(edges));
    } catch (const GeometryError&) {
    }
  }
}

}  // namespace charnum::gen
