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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charnum {

/// Pencil coefficients of an interior edge: l = a*first + b*second.
struct EdgeCoeffs {
  Rational a;
  Rational b;
  friend bool operator==(const EdgeCoeffs&, const EdgeCoeffs&) = default;
};

namespace detail {

inline std::size_t ms_edge_count(int mu) { return 3 * static_cast<std::size_t>(mu) + 3; }

inline void check_ms_data(int mu, const ProjLine& u, const ProjLine& v, const ProjLine& w,
                          std::span<const EdgeCoeffs> edges) {
  if (u == v || v == w || w == u) throw GeometryError("triangle lines must be pairwise distinct");
  if (concurrent(u, v, w)) throw GeometryError("triangle lines have a common zero");
  const std::size_t per = static_cast<std::size_t>(mu) + 1;
  if (edges.size() != 3 * per) {
    throw std::invalid_argument("expected " + std::to_string(3 * per) + " edges, got " + std::to_string(edges.size()));
  }
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t i = 0; i < per; ++i) {
      const auto& e = edges[g * per + i];
      if (e.a.is_zero() && e.b.is_zero()) throw GeometryError("edge with zero pencil coefficients");
      for (std::size_t j = 0; j < i; ++j) {
        const auto& f = edges[g * per + j];
        if ((e.a * f.b - e.b * f.a).is_zero()) throw GeometryError("repeated edge in pencil " + std::to_string(g + 1));
      }
    }
  }
}

/// Pencil basis of group g: (u,v), (v,w), (w,u).
inline std::pair<const ProjLine*, const ProjLine*> pencil(std::size_t g, const ProjLine& u, const ProjLine& v,
                                                          const ProjLine& w) {
  switch (g) {
    case 0: return {&u, &v};
    case 1: return {&v, &w};
    default: return {&w, &u};
  }
}

inline RatVector power_coefficients(const Triple& line, int exponent) {
  return HomPoly::linear(line).power(exponent).coefficients();
}

inline std::vector<Triple> ms_edge_lines(int mu, const ProjLine& u, const ProjLine& v, const ProjLine& w,
                                         std::span<const EdgeCoeffs> edges) {
  const std::size_t per = static_cast<std::size_t>(mu) + 1;
  std::vector<Triple> out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [p, q] = pencil(i / per, u, v, w);
    Triple t;
    for (std::size_t k = 0; k < 3; ++k) t[k] = edges[i].a * (*p)[k] + edges[i].b * (*q)[k];
    out.push_back(t);
  }
  return out;
}

// Unknowns: lambda_1..lambda_{3mu+3}, lambda_u, lambda_v, lambda_w.
// Vertex blocks carry (+u,+v), (-v,+w), (-w,-u).
inline RatMatrix conformality_system(int mu, const ProjLine& u, const ProjLine& v, const ProjLine& w,
                                     std::span<const EdgeCoeffs> edges) {
  const int k = mu + 1;
  const std::size_t n = monomial_count(k);
  const std::size_t per = static_cast<std::size_t>(k);
  const std::size_t m = edges.size();
  const auto lines = ms_edge_lines(mu, u, v, w, edges);
  const std::array<RatVector, 3> vertex_terms{power_coefficients(u.coords(), k), power_coefficients(v.coords(), k),
                                              power_coefficients(w.coords(), k)};
  // (block, vertex-line index, sign)
  static constexpr std::array<std::array<std::pair<std::size_t, int>, 2>, 3> kVertexTerms{
      {{{{0, 1}, {1, 1}}}, {{{1, -1}, {2, 1}}}, {{{2, -1}, {0, -1}}}}};

  RatMatrix mat(3 * n, m + 3);
  for (std::size_t i = 0; i < m; ++i) {
    const auto col = power_coefficients(lines[i], k);
    const std::size_t block = i / per;
    for (std::size_t r = 0; r < n; ++r) mat(block * n + r, i) = col[r];
  }
  for (std::size_t block = 0; block < 3; ++block) {
    for (const auto& [line, sign] : kVertexTerms[block]) {
      for (std::size_t r = 0; r < n; ++r) mat(block * n + r, m + line) = vertex_terms[line][r] * sign;
    }
  }
  return mat;
}

inline RatMatrix reduced_system(int mu, const ProjLine& u, const ProjLine& v, const ProjLine& w,
                                std::span<const EdgeCoeffs> edges) {
  const int k = mu + 1;
  const auto lines = ms_edge_lines(mu, u, v, w, edges);
  RatMatrix mat(monomial_count(k), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto col = power_coefficients(lines[i], k);
    for (std::size_t r = 0; r < col.size(); ++r) mat(r, i) = col[r];
  }
  return mat;
}

inline Rational pencil_product(std::span<const EdgeCoeffs> edges) {
  Rational p = 1;
  for (const auto& e : edges) {
    if (e.a.is_zero() || e.b.is_zero()) throw GeometryError("edge through opposite vertex");
    p *= e.a / e.b;
  }
  return p;
}

}  // namespace detail

/// Morgan-Scott type configuration of smoothness mu: an inner triangle with
/// edge lines u, v, w and mu+1 interior edges through each inner vertex,
/// given by pencil coefficients. Edges 0..mu lie in the pencil (u,v),
/// the next mu+1 in (v,w) and the last mu+1 in (w,u).
class MSConfig {
 public:
  MSConfig(int mu, ProjLine u, ProjLine v, ProjLine w, std::vector<EdgeCoeffs> edges)
      : mu_(mu), u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), edges_(std::move(edges)) {
    if (mu_ < 1) throw std::invalid_argument("smoothness must be at least 1");
    detail::check_ms_data(mu_, u_, v_, w_, edges_);
  }

  [[nodiscard]] int mu() const { return mu_; }
  [[nodiscard]] const ProjLine& u() const { return u_; }
  [[nodiscard]] const ProjLine& v() const { return v_; }
  [[nodiscard]] const ProjLine& w() const { return w_; }
  [[nodiscard]] const std::vector<EdgeCoeffs>& edges() const { return edges_; }

  /// Coefficients of the interior edge lines, in edge order.
  [[nodiscard]] std::vector<ProjLine> edge_lines() const {
    std::vector<ProjLine> out;
    for (const auto& t : detail::ms_edge_lines(mu_, u_, v_, w_, edges_)) out.emplace_back(t);
    return out;
  }

  friend bool operator==(const MSConfig& a, const MSConfig& b) {
    return a.mu_ == b.mu_ && a.u_.same_representative(b.u_) && a.v_.same_representative(b.v_) &&
           a.w_.same_representative(b.w_) && a.edges_ == b.edges_;
  }

 private:
  int mu_;
  ProjLine u_, v_, w_;
  std::vector<EdgeCoeffs> edges_;
};

struct SplineDimReport {
  std::size_t generic_dim = 0;
  std::size_t tau = 0;
  std::size_t total_dim = 0;
  bool singular = false;
  friend bool operator==(const SplineDimReport&, const SplineDimReport&) = default;
};

inline RatMatrix conformality_matrix(const MSConfig& cfg) {
  return detail::conformality_system(cfg.mu(), cfg.u(), cfg.v(), cfg.w(), cfg.edges());
}

/// Coefficient matrix of sum_i lambda_i l_i^{mu+1} = 0 over the monomials of
/// degree mu+1.
inline RatMatrix reduced_matrix(const MSConfig& cfg) {
  return detail::reduced_system(cfg.mu(), cfg.u(), cfg.v(), cfg.w(), cfg.edges());
}

/// dim S^mu_{mu+1} = C(mu+3, 2) + tau.
inline SplineDimReport spline_dim(const MSConfig& cfg) {
  const std::size_t tau = nullity(conformality_matrix(cfg));
  if (tau != nullity(reduced_matrix(cfg))) throw std::logic_error("conformality bridge violated");
  const std::size_t generic = monomial_count(cfg.mu() + 1);
  return {generic, tau, generic + tau, tau > 0};
}

/// prod a_i / b_i over all interior edges == (-1)^(mu+1).
inline bool product_criterion(const MSConfig& cfg) {
  return detail::pencil_product(cfg.edges()) == Rational(cfg.mu() % 2 == 0 ? -1 : 1);
}

/// dim S^0_1 for the partition with one interior edge per inner vertex,
/// edges given by pencil coefficients over the lines u, v, w. Either 3 or 4.
inline std::size_t s10_dim(const ProjLine& u, const ProjLine& v, const ProjLine& w,
                           std::span<const EdgeCoeffs> edges) {
  detail::check_ms_data(0, u, v, w, edges);
  const bool product_holds = detail::pencil_product(edges) == -1;
  const std::size_t tau = nullity(detail::conformality_system(0, u, v, w, edges));
  if (tau != nullity(detail::reduced_system(0, u, v, w, edges))) throw std::logic_error("conformality bridge violated");
  if ((tau > 0) != product_holds) throw std::logic_error("rank and product criterion disagree");
  return 3 + tau;
}

/// Same, over the coordinate triangle x = 0, y = 0, z = 0.
inline std::size_t s10_dim(std::span<const EdgeCoeffs> edges) {
  return s10_dim(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1), edges);
}

/// Vertex data of a Morgan-Scott triangulation: outer triangle A, B, C and
/// inner triangle a, b, c, with a facing the side BC and so on. Interior
/// edges are the inner triangle sides plus the connectors Ba, Ca, Cb, Ab,
/// Ac, Bc.
struct MSVertexData {
  ProjPoint A, B, C;
  ProjPoint a, b, c;
};

namespace detail {

inline void check_ms_vertices(const MSVertexData& d) {
  if (collinear(d.A, d.B, d.C)) throw GeometryError("degenerate outer triangle");
  if (collinear(d.a, d.b, d.c)) throw GeometryError("degenerate inner triangle");
  const std::array<ProjLine, 3> sides{join(d.c, d.a), join(d.a, d.b), join(d.b, d.c)};
  const std::array<ProjLine, 6> connectors{join(d.B, d.a), join(d.C, d.a), join(d.C, d.b),
                                           join(d.A, d.b), join(d.A, d.c), join(d.B, d.c)};
  for (std::size_t i = 0; i < connectors.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (connectors[i] == connectors[j]) throw GeometryError("two interior edges on one line");
    for (const auto& s : sides)
      if (connectors[i] == s) throw GeometryError("interior edge along an inner side");
  }
}

}  // namespace detail

/// Smoothness-1 configuration of the vertex data: u = ca, v = ab, w = bc,
/// so that a = <u,v>, b = <v,w>, c = <w,u>.
inline MSConfig ms_config_from_vertices(const MSVertexData& d) {
  detail::check_ms_vertices(d);
  const ProjLine u = join(d.c, d.a);
  const ProjLine v = join(d.a, d.b);
  const ProjLine w = join(d.b, d.c);
  std::vector<EdgeCoeffs> edges;
  auto add = [&](const ProjPoint& outer, const ProjPoint& inner, const ProjLine& p, const ProjLine& q) {
    const Decomposition dec = decompose(join(outer, inner), p, q);
    edges.push_back({dec.alpha, dec.beta});
  };
  add(d.B, d.a, u, v);
  add(d.C, d.a, u, v);
  add(d.C, d.b, v, w);
  add(d.A, d.b, v, w);
  add(d.A, d.c, w, u);
  add(d.B, d.c, w, u);
  return MSConfig(1, u, v, w, std::move(edges));
}

/// True iff the lines Aa, Bb, Cc are concurrent.
inline bool ms_geometric_check(const MSVertexData& d) {
  detail::check_ms_vertices(d);
  return concurrent(join(d.A, d.a), join(d.B, d.b), join(d.C, d.c));
}

/// Dual of a frame carrying n points per line: frame vertices become the
/// triangle lines and each point p = alpha*u + beta*v becomes the edge with
/// coefficients (alpha, beta). Smoothness is n - 1.
inline MSConfig dual_ms_config(const TriFrame& frame, std::span<const ProjPoint> on_a, std::span<const ProjPoint> on_b,
                               std::span<const ProjPoint> on_c) {
  if (on_a.size() != on_b.size() || on_b.size() != on_c.size() || on_a.size() < 2) {
    throw std::invalid_argument("need the same number (at least two) of points on each frame line");
  }
  std::vector<EdgeCoeffs> edges;
  auto add = [&](std::span<const ProjPoint> pts, const ProjPoint& p, const ProjPoint& q) {
    for (const auto& pt : pts) {
      const Decomposition dec = decompose(pt, p, q);
      edges.push_back({dec.alpha, dec.beta});
    }
  };
  add(on_a, frame.u(), frame.v());
  add(on_b, frame.v(), frame.w());
  add(on_c, frame.w(), frame.u());
  return MSConfig(static_cast<int>(on_a.size()) - 1, dual(frame.u()), dual(frame.v()), dual(frame.w()),
                  std::move(edges));
}

}  // namespace charnum
