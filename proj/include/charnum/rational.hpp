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

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charnum {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      q_ = mpq_class(mpz_class(static_cast<signed long>(value)));
    } else {
      q_ = mpq_class(mpz_class(static_cast<unsigned long>(value)));
    }
  }

  Rational(const Integer& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  /// Builds n/d in canonical form. Throws std::domain_error when d == 0.
  Rational(const Integer& numerator, const Integer& denominator) {
    if (sgn(denominator) == 0) throw std::domain_error("division by zero");
    q_.get_num() = numerator;
    q_.get_den() = denominator;
    q_.canonicalize();
  }

  /// Parses "p", "-p", "p/q" (decimal integers, optional sign on p only).
  static Rational parse(std::string_view text) {
    auto bad = [&] {
      return std::invalid_argument("malformed rational literal \"" + std::string(text) + "\"");
    };
    auto parse_int = [&](std::string_view digits, bool allow_sign) {
      std::size_t start = 0;
      if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
      if (start == digits.size()) throw bad();
      for (std::size_t i = start; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9') throw bad();
      }
      std::string s(digits[0] == '+' ? digits.substr(1) : digits);
      return Integer(s, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    return Rational(parse_int(text.substr(0, slash), true),
                    parse_int(text.substr(slash + 1), false));
  }

  [[nodiscard]] const Integer& numerator() const { return q_.get_num(); }
  [[nodiscard]] const Integer& denominator() const { return q_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] double to_double() const { return q_.get_d(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const { return q_.get_str(10); }

  [[nodiscard]] Rational abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
  }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Canonical n/d. Throws std::domain_error("division by zero") when d == 0.
inline Rational rat_normalize(const Integer& n, const Integer& d) { return Rational(n, d); }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Rescales a vector in place to coprime integers whose first nonzero entry is
/// positive. The all-zero vector is left untouched.
template <class Range>
void make_primitive(Range& values) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  const Rational* first = nullptr;
  for (const Rational& v : values) {
    if (v.is_zero()) continue;
    if (first == nullptr) first = &v;
    den_lcm = lcm(den_lcm, v.denominator());
    num_gcd = gcd(num_gcd, v.numerator());
  }
  if (first == nullptr) return;
  Rational scale(den_lcm, num_gcd);
  if (first->sign() < 0) scale = -scale;
  for (Rational& v : values) v *= scale;
}

}  // namespace charnum

