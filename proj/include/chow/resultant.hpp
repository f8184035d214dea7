#pragma once

// Sylvester matrices and exact resultants of two binary forms of equal degree.

#include <cstddef>
#include <vector>

#include "chow/binary_form.hpp"
#include "chow/mpoly.hpp"

namespace chow {

template <class C>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, C(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  C& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const C& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<C> data_;
};

inline Scalar exact_div(const Scalar& a, const Scalar& b) { return a / b; }
inline MPoly exact_div(const MPoly& a, const MPoly& b) { return exact_quotient(a, b); }

/// 2d x 2d Sylvester matrix: rows 0..d-1 carry h1 shifted right by the row
/// index, rows d..2d-1 carry h2 the same way.
template <class C>
struct SylvesterMatrix {
  int d = 0;
  Matrix<C> entries;
};

template <class C>
SylvesterMatrix<C> sylvester(const BinaryForm<C>& h1, const BinaryForm<C>& h2) {
  const int d = h1.degree();
  if (h2.degree() != d) throw Error("sylvester: forms differ in degree");
  if (d < 1) throw Error("sylvester: degree must be at least 1");
  SylvesterMatrix<C> s{d, Matrix<C>(2 * d, 2 * d)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= d; ++j) {
      s.entries(i, i + j) = h1.coeff(j);
      s.entries(d + i, i + j) = h2.coeff(j);
    }
  return s;
}

/// Fraction-free Gaussian elimination. Each update divides exactly by the
/// previous pivot; a zero pivot is replaced by the first lower row with a
/// nonzero entry in that column.
template <class C>
C det_bareiss(Matrix<C> m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return C(1);
  C prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return C(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        C t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(t, prev);
      }
      m(i, k) = C(0);
    }
    prev = m(k, k);
  }
  C r = m(n - 1, n - 1);
  return negate ? C(-r) : r;
}

namespace detail {

/// Cofactor expansion along the first row of the submatrix on `rows` x `cols`.
template <class C>
C minor_det(const Matrix<C>& m, const std::vector<std::size_t>& rows, std::vector<std::size_t> cols) {
  const std::size_t k = rows.size();
  if (k == 0) return C(1);
  if (k == 1) return m(rows[0], cols[0]);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  C sum(0);
  for (std::size_t c = 0; c < k; ++c) {
    const C& a = m(rows[0], cols[c]);
    if (is_zero(a)) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t x = 0; x < k; ++x)
      if (x != c) sub_cols.push_back(cols[x]);
    C term = a * minor_det(m, sub_rows, sub_cols);
    if (c % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace detail

/// Generalized Laplace expansion along the top d rows of a 2d x 2d matrix:
/// sum over d-subsets S of columns of sign(S) * top(S) * bottom(complement).
/// Exact for every matrix; cheapest when the two row blocks involve disjoint
/// variables, where it yields the bidegree split directly.
template <class C>
C det_laplace_split(const Matrix<C>& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw Error("laplace split needs an even square matrix");
  const std::size_t n = m.rows(), d = n / 2;
  std::vector<std::size_t> top(d), bottom(d);
  for (std::size_t i = 0; i < d; ++i) {
    top[i] = i;
    bottom[i] = d + i;
  }
  C sum(0);
  // Enumerate d-subsets of {0..n-1} by bitmask.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != d) continue;
    std::vector<std::size_t> s, rest;
    std::size_t col_sum = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) {
        s.push_back(c);
        col_sum += c;
      } else {
        rest.push_back(c);
      }
    }
    C a = detail::minor_det(m, top, s);
    if (is_zero(a)) continue;
    C b = detail::minor_det(m, bottom, rest);
    if (is_zero(b)) continue;
    // Row indices 0..d-1 sum to d(d-1)/2.
    const bool odd = ((d * (d - 1) / 2 + col_sum) % 2) != 0;
    if (odd) {
      sum -= a * b;
    } else {
      sum += a * b;
    }
  }
  return sum;
}

enum class DetBackend { Auto, Bareiss, Laplace };

namespace detail {

inline bool block_free(const MPoly& p, Block banned) {
  if (!p.ring()) return true;
  const Ring& ring = *p.ring();
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] && ring[i].block == banned) return false;
  return true;
}

/// True when the top block is free of v-variables and the bottom of u.
inline bool has_uv_split(const SylvesterMatrix<MPoly>& s) {
  for (int j = 0; j < 2 * s.d; ++j) {
    if (!block_free(s.entries(0, j), Block::V)) return false;
    if (!block_free(s.entries(s.d, j), Block::U)) return false;
  }
  return true;
}

inline bool has_uv_split(const SylvesterMatrix<Scalar>&) { return false; }

}  // namespace detail

/// Res(h1, h2) = det(sylvester(h1, h2)). Auto takes the Laplace split when
/// the rows separate into u- and v-blocks, Bareiss otherwise.
template <class C>
C resultant(const BinaryForm<C>& h1, const BinaryForm<C>& h2, DetBackend backend = DetBackend::Auto) {
  SylvesterMatrix<C> s = sylvester(h1, h2);
  if (backend == DetBackend::Auto)
    backend = detail::has_uv_split(s) ? DetBackend::Laplace : DetBackend::Bareiss;
  if (backend == DetBackend::Laplace) return det_laplace_split(s.entries);
  return det_bareiss(s.entries);
}

}  // namespace chow
