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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace charnum {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  [[nodiscard]] RatVector operator*(std::span<const Rational> x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    RatVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational acc;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!(*this)(r, c).is_zero() && !x[c].is_zero()) acc += (*this)(r, c) * x[c];
      }
      y[r] = std::move(acc);
    }
    return y;
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

/// Integer row echelon form produced by fraction-free elimination.
struct IntegerEchelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;          // row-major, rows x cols
  std::vector<std::size_t> pivot_cols;   // one per nonzero echelon row
  std::vector<Integer> row_scales;       // original row r was multiplied by row_scales[r]
  int swap_sign = 1;

  Integer& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  [[nodiscard]] const Integer& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Rows are first cleared of denominators, then reduced with Bareiss updates.
// Pivot: first nonzero entry in the current column, scanning rows downward.
inline IntegerEchelon bareiss_echelon(const RatMatrix& m) {
  IntegerEchelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.entries.resize(e.rows * e.cols);
  e.row_scales.resize(e.rows);
  for (std::size_t r = 0; r < e.rows; ++r) {
    Integer scale = 1;
    for (const Rational& v : m.row(r)) scale = lcm(scale, v.denominator());
    e.row_scales[r] = scale;
    for (std::size_t c = 0; c < e.cols; ++c) {
      const Rational& v = m(r, c);
      e.at(r, c) = v.numerator() * (scale / v.denominator());
    }
  }

  Integer previous = 1;
  std::size_t pivot_row = 0;
  Integer quotient;
  for (std::size_t col = 0; col < e.cols && pivot_row < e.rows; ++col) {
    std::size_t found = pivot_row;
    while (found < e.rows && sgn(e.at(found, col)) == 0) ++found;
    if (found == e.rows) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < e.cols; ++c) std::swap(e.at(found, c), e.at(pivot_row, c));
      std::swap(e.row_scales[found], e.row_scales[pivot_row]);
      e.swap_sign = -e.swap_sign;
    }
    const Integer pivot = e.at(pivot_row, col);
    for (std::size_t r = pivot_row + 1; r < e.rows; ++r) {
      const Integer factor = e.at(r, col);
      for (std::size_t c = col + 1; c < e.cols; ++c) {
        Integer value = pivot * e.at(r, c) - factor * e.at(pivot_row, c);
        Integer rem;
        mpz_tdiv_qr(quotient.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        if (sgn(rem) != 0) throw std::logic_error("fraction-free elimination lost exactness");
        e.at(r, c) = quotient;
      }
      e.at(r, col) = 0;
    }
    previous = pivot;
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return e;
}

}  // namespace detail

/// Exact rank over the rationals.
inline std::size_t rank(const RatMatrix& m) { return detail::bareiss_echelon(m).pivot_cols.size(); }

/// Basis of the right nullspace. One vector per free column (ascending), each
/// scaled to coprime integers with its first nonzero entry positive.
inline std::vector<RatVector> nullspace(const RatMatrix& m) {
  const auto e = detail::bareiss_echelon(m);
  const std::size_t rk = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector x(m.cols());
    x[free] = 1;
    for (std::size_t r = rk; r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      Rational acc;
      for (std::size_t c = pc + 1; c < m.cols(); ++c) {
        if (sgn(e.at(r, c)) != 0 && !x[c].is_zero()) acc += Rational(e.at(r, c)) * x[c];
      }
      x[pc] = -acc / Rational(e.at(r, pc));
    }
    make_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

inline std::size_t nullity(const RatMatrix& m) { return m.cols() - rank(m); }

/// Determinant of a square matrix.
inline Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  const auto e = detail::bareiss_echelon(m);
  if (e.pivot_cols.size() < m.rows()) return 0;
  // The last Bareiss pivot is the determinant of the integer-scaled matrix.
  Integer scales = 1;
  for (const auto& s : e.row_scales) scales *= s;
  return Rational(e.at(m.rows() - 1, m.cols() - 1) * e.swap_sign, scales);
}

}  // namespace charnum
