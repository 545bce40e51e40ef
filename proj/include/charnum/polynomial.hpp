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

#include <charnum/projective.hpp>
#include <charnum/rational.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charnum {

/// Exponents of x^i y^j z^k.
struct Exponent {
  int x = 0;
  int y = 0;
  int z = 0;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

inline std::size_t monomial_count(int degree) {
  return degree < 0 ? 0 : static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}

/// Degree-d monomials in graded-lexicographic order:
/// x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y^2, x^{d-2}yz, x^{d-2}z^2, ..., z^d.
inline std::vector<Exponent> monomials(int degree) {
  std::vector<Exponent> out;
  out.reserve(monomial_count(degree));
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  return out;
}

/// Position of an exponent triple in `monomials(x + y + z)`.
inline std::size_t monomial_index(const Exponent& e) {
  const int d = e.x + e.y + e.z;
  const int rest = d - e.x;  // y + z
  // Monomials with a larger x-exponent come first: sum_{i > e.x} (d - i + 1).
  const std::size_t before = static_cast<std::size_t>(rest * (rest + 1) / 2);
  return before + static_cast<std::size_t>(rest - e.y);
}

inline std::string monomial_name(const Exponent& e) {
  std::string s;
  auto put = [&](char var, int p) {
    if (p == 0) return;
    s += var;
    if (p > 1) s += "^" + std::to_string(p);
  };
  put('x', e.x);
  put('y', e.y);
  put('z', e.z);
  return s.empty() ? "1" : s;
}

inline Rational evaluate_monomial(const Exponent& e, const Triple& p) {
  return pow(p[0], static_cast<unsigned>(e.x)) * pow(p[1], static_cast<unsigned>(e.y)) *
         pow(p[2], static_cast<unsigned>(e.z));
}

/// Homogeneous polynomial of a fixed degree in x, y, z; may be identically
/// zero. Coefficients follow `monomials(degree)`.
class HomPoly {
 public:
  HomPoly() : HomPoly(0) {}
  explicit HomPoly(int degree) : degree_(degree), coeffs_(monomial_count(degree)) {
    if (degree < 0) throw std::invalid_argument("negative polynomial degree");
  }
  HomPoly(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("negative polynomial degree");
    if (coeffs_.size() != monomial_count(degree)) {
      throw std::invalid_argument("degree " + std::to_string(degree) + " needs " +
                                  std::to_string(monomial_count(degree)) + " coefficients, got " +
                                  std::to_string(coeffs_.size()));
    }
  }

  /// The linear form l1 x + l2 y + l3 z.
  static HomPoly linear(const Triple& l) { return HomPoly(1, {l[0], l[1], l[2]}); }

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] const Rational& coefficient(const Exponent& e) const { return coeffs_[monomial_index(e)]; }
  Rational& coefficient(const Exponent& e) { return coeffs_[monomial_index(e)]; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
  }

  [[nodiscard]] Rational operator()(const Triple& p) const {
    // Horner-free but exact; degrees here stay small.
    const auto mons = monomials(degree_);
    Rational acc;
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (!coeffs_[i].is_zero()) acc += coeffs_[i] * evaluate_monomial(mons[i], p);
    }
    return acc;
  }

  /// Partial derivative with respect to variable 0 (x), 1 (y) or 2 (z).
  [[nodiscard]] HomPoly derivative(int var) const {
    if (degree_ == 0) return HomPoly(0);
    HomPoly d(degree_ - 1);
    const auto mons = monomials(degree_);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      Exponent e = mons[i];
      int* p = var == 0 ? &e.x : var == 1 ? &e.y : &e.z;
      if (*p == 0 || coeffs_[i].is_zero()) continue;
      const int power = (*p)--;
      d.coefficient(e) += coeffs_[i] * power;
    }
    return d;
  }

  [[nodiscard]] HomPoly scaled(const Rational& k) const {
    HomPoly r = *this;
    for (auto& c : r.coeffs_) c *= k;
    return r;
  }

  friend HomPoly operator+(const HomPoly& a, const HomPoly& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("adding polynomials of different degree");
    HomPoly r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  friend HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly r(a.degree_ + b.degree_);
    const auto ma = monomials(a.degree_);
    const auto mb = monomials(b.degree_);
    for (std::size_t i = 0; i < ma.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < mb.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coefficient({ma[i].x + mb[j].x, ma[i].y + mb[j].y, ma[i].z + mb[j].z}) += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  [[nodiscard]] HomPoly power(int k) const {
    HomPoly r(0, {Rational(1)});
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const HomPoly&, const HomPoly&) = default;

  [[nodiscard]] std::string str() const {
    const auto mons = monomials(degree_);
    std::string s;
    for (std::size_t i = 0; i < mons.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c.is_zero()) continue;
      const bool neg = c.sign() < 0;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      const Rational mag = c.abs();
      const std::string name = monomial_name(mons[i]);
      if (name == "1") {
        s += mag.str();
      } else {
        if (mag != 1) s += mag.str() + "*";
        s += name;
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  int degree_ = 0;
  std::vector<Rational> coeffs_;
};

/// g(s, t) = sum_i c_i s^{n-i} t^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  }

  /// a s + b t
  static BinaryForm linear(const Rational& a, const Rational& b) { return BinaryForm({a, b}); }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_zero(); });
  }

  [[nodiscard]] Rational operator()(const Rational& s, const Rational& t) const {
    const int n = degree();
    Rational acc;
    for (int i = 0; i <= n; ++i) {
      if (c_[i].is_zero()) continue;
      acc += c_[i] * pow(s, static_cast<unsigned>(n - i)) * pow(t, static_cast<unsigned>(i));
    }
    return acc;
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BinaryForm(std::move(r));
  }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.c_.size() != b.c_.size()) throw std::invalid_argument("adding binary forms of different degree");
    BinaryForm r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }

  /// Exact quotient by the linear factor (beta s - alpha t) vanishing at
  /// (s:t) = (alpha:beta). Throws when that factor does not divide the form.
  [[nodiscard]] BinaryForm divide_root(const Rational& alpha, const Rational& beta) const {
    const int n = degree();
    if (n < 1) throw std::invalid_argument("cannot deflate a constant form");
    if (alpha.is_zero() && beta.is_zero()) throw std::invalid_argument("root (0:0) is not a point");
    // c_i = beta d_i - alpha d_{i-1}, for i = 0..n with d_{-1} = d_n = 0.
    std::vector<Rational> d(static_cast<std::size_t>(n));
    if (!beta.is_zero()) {
      for (int i = 0; i < n; ++i) d[i] = (c_[i] + (i > 0 ? alpha * d[i - 1] : Rational())) / beta;
      if (c_[n] != -alpha * d[n - 1]) throw std::domain_error("linear factor does not divide the form");
    } else {
      if (!c_[0].is_zero()) throw std::domain_error("linear factor does not divide the form");
      for (int i = 1; i <= n; ++i) d[i - 1] = -c_[i] / alpha;
    }
    return BinaryForm(std::move(d));
  }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Rational> c_{Rational()};
};

/// Coefficients of P(s u + t v).
inline BinaryForm restrict_poly(const HomPoly& p, const Triple& u, const Triple& v) {
  const int n = p.degree();
  std::array<std::vector<BinaryForm>, 3> powers;
  for (std::size_t k = 0; k < 3; ++k) {
    powers[k].reserve(static_cast<std::size_t>(n) + 1);
    powers[k].push_back(BinaryForm({Rational(1)}));
    const auto lin = BinaryForm::linear(u[k], v[k]);
    for (int e = 1; e <= n; ++e) powers[k].push_back(powers[k].back() * lin);
  }
  BinaryForm g(std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  const auto mons = monomials(n);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    const auto term = powers[0][mons[i].x] * powers[1][mons[i].y] * powers[2][mons[i].z];
    std::vector<Rational> scaled = term.coefficients();
    for (auto& x : scaled) x *= c;
    g = g + BinaryForm(std::move(scaled));
  }
  return g;
}

}  // namespace charnum
