#pragma once

// Parametrized curves f = f0 e0 + ... + fn en and codimension-2 planes.

#include <string>
#include <utility>
#include <vector>

#include "chow/binary_form.hpp"
#include "chow/resultant.hpp"

namespace chow {

/// (n+1) numeric forms of a common degree d >= 1, not all zero.
class CurveMap {
 public:
  CurveMap(int n, std::vector<NumericForm> components) : n_(n), components_(std::move(components)) {
    if (n_ < 1) throw Error("curve map: ambient dimension must be at least 1");
    if (static_cast<int>(components_.size()) != n_ + 1)
      throw Error("curve map: expected " + std::to_string(n_ + 1) + " components");
    d_ = components_.front().degree();
    if (d_ < 1) throw Error("curve map: degree must be at least 1");
    bool all_zero = true;
    for (const auto& c : components_) {
      if (c.degree() != d_) throw Error("curve map: components differ in degree");
      all_zero = all_zero && c.is_zero();
    }
    if (all_zero) throw Error("curve map: all components are zero");
  }

  /// Convenience: rows of integer coefficients.
  static CurveMap from_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<NumericForm> comps;
    for (const auto& r : rows) {
      std::vector<Scalar> c;
      for (long x : r) c.emplace_back(x);
      comps.emplace_back(std::move(c));
    }
    return CurveMap(static_cast<int>(rows.size()) - 1, std::move(comps));
  }

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<NumericForm>& components() const { return components_; }
  const NumericForm& operator[](int i) const { return components_.at(i); }

  std::vector<Scalar> evaluate(const Scalar& z0, const Scalar& z1) const {
    std::vector<Scalar> p;
    p.reserve(components_.size());
    for (const auto& c : components_) p.push_back(c.evaluate(z0, z1));
    return p;
  }

  /// <f, w> = sum_i w_i f_i
  NumericForm contract(const std::vector<Scalar>& w) const {
    if (static_cast<int>(w.size()) != n_ + 1) throw Error("contract: covector has wrong length");
    NumericForm h = NumericForm::zero(d_);
    for (int i = 0; i <= n_; ++i)
      if (!is_zero(w[i])) h += components_[i] * w[i];
    return h;
  }

  friend bool operator==(const CurveMap&, const CurveMap&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<NumericForm> components_;
};

/// Codimension-2 plane {x : <u, x> = <v, x> = 0}; u and v independent.
struct Plane {
  std::vector<Scalar> u;
  std::vector<Scalar> v;

  Plane(std::vector<Scalar> u_, std::vector<Scalar> v_) : u(std::move(u_)), v(std::move(v_)) {
    if (u.size() != v.size() || u.size() < 2) throw Error("plane: covectors must have equal length >= 2");
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        if (!is_zero(Scalar(u[i] * v[j] - u[j] * v[i]))) return;
    throw Error("covectors dependent");
  }

  int n() const { return static_cast<int>(u.size()) - 1; }
};

inline Scalar determinant(const std::vector<std::vector<Scalar>>& rows) {
  Matrix<Scalar> m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error("determinant of non-square matrix");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return det_bareiss(std::move(m));
}

}  // namespace chow
