#pragma once

// Generators and independent reference computations shared by the tests.
// Nothing here calls the resultant or GCD code it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "chow/chow.hpp"

namespace chow::testing {

using Rng = std::mt19937_64;

inline RingPtr uv_ring(int n) { return chow_ring(n); }

inline MPoly var(const RingPtr& r, const char* name) { return MPoly::variable(r, name); }

/// p_ij = u_i v_j - u_j v_i in chow_ring(n).
inline MPoly pl(const RingPtr& r, int i, int j) {
  const int n = static_cast<int>(r->arity()) / 2 - 1;
  MPoly ui = MPoly::variable(r, i), uj = MPoly::variable(r, j);
  MPoly vi = MPoly::variable(r, n + 1 + i), vj = MPoly::variable(r, n + 1 + j);
  return ui * vj - uj * vi;
}

inline NumericForm random_form(Rng& rng, int d, long lo = -5, long hi = 5) {
  std::vector<Scalar> c;
  for (int j = 0; j <= d; ++j) c.push_back(random_integer(rng, lo, hi));
  return NumericForm(std::move(c));
}

inline NumericForm random_nonzero_form(Rng& rng, int d, long lo = -5, long hi = 5) {
  while (true) {
    NumericForm f = random_form(rng, d, lo, hi);
    if (!f.is_zero()) return f;
  }
}

inline CurveMap random_curve(Rng& rng, int n, int d, long lo = -5, long hi = 5) {
  while (true) {
    std::vector<NumericForm> comps;
    bool any = false;
    for (int i = 0; i <= n; ++i) {
      comps.push_back(random_form(rng, d, lo, hi));
      any = any || !comps.back().is_zero();
    }
    if (any) return CurveMap(n, std::move(comps));
  }
}

inline CurveMap random_curve_in_U(Rng& rng, int n, int d, long lo = -5, long hi = 5) {
  while (true) {
    CurveMap f = random_curve(rng, n, d, lo, hi);
    Sampler s(rng());
    if (in_U(f, s).in_U) return f;
  }
}

inline std::vector<Scalar> random_vector(Rng& rng, int size, long lo = -5, long hi = 5) {
  std::vector<Scalar> v;
  for (int i = 0; i < size; ++i) v.push_back(random_integer(rng, lo, hi));
  return v;
}

inline bool independent(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!is_zero(Scalar(u[i] * v[j] - u[j] * v[i]))) return true;
  return false;
}

inline Plane random_plane(Rng& rng, int n) {
  while (true) {
    auto u = random_vector(rng, n + 1), v = random_vector(rng, n + 1);
    if (independent(u, v)) return Plane(u, v);
  }
}

/// A random covector annihilating `p`.
inline std::vector<Scalar> annihilator(Rng& rng, const std::vector<Scalar>& p) {
  std::size_t k = 0;
  while (is_zero(p[k])) ++k;
  auto w = random_vector(rng, static_cast<int>(p.size()));
  Scalar dot(0);
  for (std::size_t i = 0; i < p.size(); ++i) dot += w[i] * p[i];
  // w - (w.p / p_k) e_k
  w[k] -= dot / p[k];
  return w;
}

/// A random plane containing the point p.
inline Plane plane_through(Rng& rng, const std::vector<Scalar>& p) {
  while (true) {
    auto u = annihilator(rng, p), v = annihilator(rng, p);
    if (independent(u, v)) return Plane(u, v);
  }
}

inline std::pair<Scalar, Scalar> random_parameter(Rng& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  while (true) {
    long a = dist(rng), b = dist(rng);
    if (a != 0 || b != 0) return {Scalar(a), Scalar(b)};
  }
}

/// Random integer 2x2 matrix whose determinant lies in {1, -1, 2}.
inline Mat2 random_gl2(Rng& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  while (true) {
    Mat2 m{Scalar(dist(rng)), Scalar(dist(rng)), Scalar(dist(rng)), Scalar(dist(rng))};
    Scalar det = m.det();
    if (det == 1 || det == -1 || det == 2) return m;
  }
}

inline std::vector<std::vector<Scalar>> random_gln(Rng& rng, int size) {
  while (true) {
    std::vector<std::vector<Scalar>> b;
    for (int i = 0; i < size; ++i) b.push_back(random_vector(rng, size, -2, 2));
    if (!is_zero(determinant(b))) return b;
  }
}

/// Leibniz determinant, summing over all permutations.
template <class C>
C leibniz_det(const Matrix<C>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  C sum(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    C t(1);
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      zero = is_zero(m(i, perm[i]));
      if (!zero) t = t * m(i, perm[i]);
    }
    if (zero) continue;
    if (inversions % 2) {
      sum -= t;
    } else {
      sum += t;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Solves A x = b over Q by Gauss-Jordan; returns false if inconsistent.
inline bool solvable(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      Scalar f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!is_zero(b[i])) return false;
  return true;
}

/// Ca(u_images, v_images).
inline CayleyBiform biform_substituted(const CayleyBiform& ca, const std::vector<MPoly>& u_images,
                                       const std::vector<MPoly>& v_images) {
  std::vector<std::optional<MPoly>> images;
  for (const auto& p : u_images) images.emplace_back(p);
  for (const auto& p : v_images) images.emplace_back(p);
  return {ca.n, ca.d, ca.form.substitute(images)};
}

}  // namespace chow::testing
