#pragma once

// The Cayley (Chow) form of a parametrized curve.
//
// A degree-d curve X in P^n is recorded by the bidegree-(d, d) form Ca(u, v)
// in two covectors that vanishes exactly when X meets {<u,x> = <v,x> = 0}.
// For a parametrization f it is computed as Res(<f,u>, <f,v>): the resultant
// of the two contractions, a polynomial in u0..un, v0..vn that depends only on
// u ^ v. When f has a base point the resultant is identically zero.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chow/binary_form.hpp"
#include "chow/curve.hpp"
#include "chow/mpoly.hpp"
#include "chow/oracle.hpp"
#include "chow/resultant.hpp"

namespace chow {

/// Bidegree-(d, d) form in u0..un, v0..vn. When the ring carries eps (for
/// one-parameter families) the coefficients are polynomials in eps.
struct CayleyBiform {
  int n = 0;
  int d = 0;
  MPoly form;

  bool is_zero() const { return form.is_zero(); }
  bool has_eps() const { return form.ring() && form.ring()->index_of("eps").has_value(); }

  friend bool operator==(const CayleyBiform&, const CayleyBiform&) = default;
};

/// A polynomial in the Pluecker variables p_ij whose expansion under
/// p_ij -> u_i v_j - u_j v_i gives back a Cayley biform.
struct PluckerRep {
  int n = 0;
  int d = 0;
  MPoly poly;
  bool canonical = false;
};

namespace detail {

inline std::vector<MPoly> block_vars(const RingPtr& ring, char prefix, int n) {
  std::vector<MPoly> vars;
  for (int i = 0; i <= n; ++i) vars.push_back(MPoly::variable(ring, std::string(1, prefix) + std::to_string(i)));
  return vars;
}

inline bool has_bidegree(const MPoly& p, int n, int d) {
  for (const auto& [m, c] : p.terms()) {
    int du = 0, dv = 0;
    for (int i = 0; i <= n; ++i) {
      du += m.exps[i];
      dv += m.exps[n + 1 + i];
    }
    if (du != d || dv != d) return false;
  }
  return true;
}

}  // namespace detail

/// Chow form of a family of component forms whose coefficients live in `ring`
/// (a chow_ring, possibly with eps).
inline CayleyBiform cayley_biform_of(int n, const std::vector<SymbolicForm>& components, const RingPtr& ring) {
  if (static_cast<int>(components.size()) != n + 1) throw Error("cayley: wrong number of components");
  const int d = components.front().degree();
  auto u = detail::block_vars(ring, 'u', n);
  auto v = detail::block_vars(ring, 'v', n);
  SymbolicForm h1 = SymbolicForm::zero(d), h2 = SymbolicForm::zero(d);
  for (int i = 0; i <= n; ++i) {
    h1 += components[i] * u[i];
    h2 += components[i] * v[i];
  }
  MPoly res = resultant(h1, h2, DetBackend::Laplace);
  return {n, d, res.promoted(ring)};
}

/// The Cayley biform of the curve parametrized by f.
inline CayleyBiform cayley_biform(const CurveMap& f) {
  RingPtr ring = chow_ring(f.n());
  std::vector<SymbolicForm> comps;
  for (const auto& c : f.components()) comps.push_back(to_symbolic(c, ring));
  return cayley_biform_of(f.n(), comps, ring);
}

inline Scalar eval_biform(const CayleyBiform& ca, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  if (static_cast<int>(u.size()) != ca.n + 1 || static_cast<int>(v.size()) != ca.n + 1)
    throw Error("eval_biform: covectors must have length n+1");
  if (ca.has_eps()) throw Error("eval_biform: biform still depends on eps");
  if (ca.form.is_zero()) return Scalar(0);
  std::vector<Scalar> values(u);
  values.insert(values.end(), v.begin(), v.end());
  return ca.form.evaluate(values);
}

/// Substitutes numeric covectors, keeping any remaining variables (eps).
inline MPoly specialize_uv(const CayleyBiform& ca, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  std::vector<std::optional<MPoly>> images(ca.form.arity());
  for (int i = 0; i <= ca.n; ++i) {
    images[i] = MPoly(u.at(i));
    images[ca.n + 1 + i] = MPoly(v.at(i));
  }
  return ca.form.substitute(images);
}

inline bool incident(const CayleyBiform& ca, const Plane& plane) {
  if (ca.is_zero()) throw Error("degenerate Cayley form");
  return is_zero(eval_biform(ca, plane.u, plane.v));
}

/// Integer coprime coefficients, leading term positive.
inline CayleyBiform normalize(const CayleyBiform& ca) {
  if (ca.is_zero()) throw Error("normalize: zero Cayley form");
  return {ca.n, ca.d, content_primitive(ca.form).second};
}

/// Reparametrization z -> A z of every component.
inline CurveMap act_gl2(const CurveMap& f, const Mat2& a) {
  if (is_zero(a.det())) throw Error("singular matrix");
  std::vector<NumericForm> comps;
  for (const auto& c : f.components()) comps.push_back(bf_substitute_gl2(c, a));
  return CurveMap(f.n(), std::move(comps));
}

/// Linear change of coordinates on the target: (Bf)_i = sum_j B_ij f_j.
inline CurveMap act_gln(const CurveMap& f, const std::vector<std::vector<Scalar>>& b) {
  if (static_cast<int>(b.size()) != f.n() + 1) throw Error("act_gln: matrix has wrong size");
  if (is_zero(determinant(b))) throw Error("singular matrix");
  std::vector<NumericForm> comps;
  for (int i = 0; i <= f.n(); ++i) {
    NumericForm h = NumericForm::zero(f.d());
    for (int j = 0; j <= f.n(); ++j)
      if (!is_zero(b[i][j])) h += f[j] * b[i][j];
    comps.push_back(std::move(h));
  }
  return CurveMap(f.n(), std::move(comps));
}

/// Ca(v, u).
inline MPoly swap_uv(const CayleyBiform& ca) {
  RingPtr ring = ca.form.ring();
  std::vector<std::optional<MPoly>> images(ca.form.arity());
  for (int i = 0; i <= ca.n; ++i) {
    images[i] = MPoly::variable(ring, "v" + std::to_string(i));
    images[ca.n + 1 + i] = MPoly::variable(ring, "u" + std::to_string(i));
  }
  return ca.form.substitute(images);
}

namespace detail {

/// sum_i x_i d/dy_i applied to p (x, y one of the u/v block pairs).
inline MPoly polarize(const MPoly& p, int n, bool u_into_v) {
  const RingPtr& ring = p.ring();
  MPoly r(ring);
  for (int i = 0; i <= n; ++i) {
    std::size_t from = u_into_v ? n + 1 + i : i;  // differentiate
    std::size_t to = u_into_v ? i : n + 1 + i;    // multiply
    MPoly dp = p.derivative(from);
    if (!dp.is_zero()) r += dp * MPoly::variable(ring, to);
  }
  return r;
}

}  // namespace detail

/// Why `ca` is not a function of u ^ v, or nullopt when it is. Checks the
/// bidegree, swap symmetry and invariance under v -> v + t u and u -> u + t v
/// (through the corresponding polarization operators).
inline std::optional<std::string> decomposability_defect(const CayleyBiform& ca) {
  if (ca.is_zero()) return std::nullopt;
  if (!detail::has_bidegree(ca.form, ca.n, ca.d)) return "terms of the wrong bidegree";
  MPoly swapped = swap_uv(ca);
  MPoly expected = (ca.d % 2 == 0) ? ca.form : -ca.form;
  if (!(swapped == expected)) return "swap symmetry fails";
  if (!detail::polarize(ca.form, ca.n, true).is_zero()) return "not invariant under v -> v + t u";
  if (!detail::polarize(ca.form, ca.n, false).is_zero()) return "not invariant under u -> u + t v";
  return std::nullopt;
}

/// p_ij -> u_i v_j - u_j v_i.
inline MPoly expand_plucker(const MPoly& p, int n) {
  RingPtr target = chow_ring(n);
  std::vector<std::optional<MPoly>> images(p.arity());
  std::size_t k = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      MPoly ui = MPoly::variable(target, i), uj = MPoly::variable(target, j);
      MPoly vi = MPoly::variable(target, n + 1 + i), vj = MPoly::variable(target, n + 1 + j);
      images[k++] = ui * vj - uj * vi;
    }
  return p.substitute(images, target);
}

namespace detail {

/// All exponent vectors of total degree d over `arity` variables, largest first.
inline std::vector<Monomial> monomials_of_degree(std::size_t arity, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(arity, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == arity) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (arity > 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

}  // namespace detail

/// Rewrites Ca as a polynomial in the Pluecker coordinates. Columns are the
/// degree-d p-monomials in graded-lex order, largest first; a column is used
/// only when it is independent of the earlier ones, which picks the reduced
/// echelon solution. Unique for n = 2 or d = 1; otherwise one representative
/// modulo the Pluecker relations.
inline PluckerRep plucker_rewrite(const CayleyBiform& ca) {
  if (ca.has_eps()) throw Error("plucker_rewrite: biform depends on eps");
  if (decomposability_defect(ca)) throw Error("not a function of u^v");
  RingPtr pring = plucker_ring(ca.n);
  PluckerRep rep{ca.n, ca.d, MPoly(pring), ca.n == 2 || ca.d == 1};
  if (ca.is_zero()) return rep;

  struct Pivot {
    MPoly expanded;  // in the chow ring
    MPoly combo;     // in the Pluecker ring; expands to `expanded`
  };
  std::map<Monomial, Pivot, GrlexGreater> pivots;

  auto reduce = [&](MPoly& target, MPoly& combo) {
    while (!target.is_zero()) {
      auto it = pivots.find(target.leading_monomial());
      if (it == pivots.end()) return false;
      Scalar f = target.leading_coefficient() / it->second.expanded.leading_coefficient();
      target -= it->second.expanded * f;
      combo -= it->second.combo * f;
    }
    return true;
  };

  for (const auto& m : detail::monomials_of_degree(pring->arity(), ca.d)) {
    MPoly combo = MPoly::term(pring, m, Scalar(1));
    MPoly expanded = expand_plucker(combo, ca.n);
    if (reduce(expanded, combo)) continue;  // dependent column
    Monomial lead = expanded.leading_monomial();
    pivots.emplace(std::move(lead), Pivot{std::move(expanded), std::move(combo)});
  }

  MPoly target = ca.form;
  MPoly acc(pring);
  while (!target.is_zero()) {
    auto it = pivots.find(target.leading_monomial());
    if (it == pivots.end()) throw Error("not a function of u^v");
    Scalar f = target.leading_coefficient() / it->second.expanded.leading_coefficient();
    target -= it->second.expanded * f;
    acc += it->second.combo * f;
  }
  rep.poly = std::move(acc);
  return rep;
}

/// Implicit equation in x0, x1, x2 of a plane curve parametrized by f in U.
/// The kernel of u ^ v in P^2 is the point u x v = (p12, -p02, p01).
inline MPoly implicitize_plane_curve(const CurveMap& f, Sampler& rng) {
  if (f.n() != 2) throw Error("implicitize: curve must lie in P^2");
  if (!in_U(f, rng).in_U) throw Error("implicitize: parametrization is not in U");
  PluckerRep rep = plucker_rewrite(cayley_biform(f));
  RingPtr xring = point_ring(2);
  MPoly x0 = MPoly::variable(xring, 0), x1 = MPoly::variable(xring, 1), x2 = MPoly::variable(xring, 2);
  // Pluecker ring order: p01, p02, p12.
  std::vector<std::optional<MPoly>> images{x2, -x1, x0};
  MPoly eq = rep.poly.substitute(images, xring);
  return content_primitive(eq).second;
}

inline MPoly implicitize_plane_curve(const CurveMap& f) {
  Sampler rng(kDefaultSeed);
  return implicitize_plane_curve(f, rng);
}

/// p(f0(z), ..., fn(z)) as a binary form.
inline NumericForm substitute_curve(const MPoly& p, const CurveMap& f) {
  if (static_cast<int>(p.arity()) != f.n() + 1) throw Error("substitute_curve: arity mismatch");
  const int deg = p.total_degree();
  NumericForm sum = NumericForm::zero(std::max(deg, 0) * f.d());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree != deg) throw Error("substitute_curve: polynomial is not homogeneous");
    NumericForm t({c});
    for (int i = 0; i <= f.n(); ++i)
      for (int k = 0; k < m.exps[i]; ++k) t = t * f[i];
    sum += t;
  }
  return sum;
}

}  // namespace chow
