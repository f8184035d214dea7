#pragma once

// Joining two rational curves through a common point into one family of
// rational curves, and reading off the limit of its Chow forms.
//
// With f(1,0) = g(0,1) = A = (1, ..., 1), the family
//   F_eps(z)_i = f_i(z) * g_i(eps z0, z1)
// is a rational curve of degree d1 + d2 for eps != 0. As eps -> 0 it
// approaches f(P^1) + g(P^1), and the lowest nonzero eps-order coefficient
// of its Chow form is the Chow form of that union.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chow/cayley.hpp"

namespace chow {

struct DegenerationFamily {
  CurveMap f;
  CurveMap g;
  RingPtr ring;  // chow_ring(n, with eps)
  std::vector<SymbolicForm> components;

  int n() const { return f.n(); }
  int d() const { return f.d() + g.d(); }
};

namespace detail {

inline std::string attachment_violations(const std::vector<Scalar>& p, const std::string& where) {
  std::ostringstream msg;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 1) continue;
    if (msg.tellp() > 0) msg << "; ";
    msg << where << ": attachment coordinate " << i;
    if (is_zero(p[i])) {
      msg << " is zero";
    } else {
      msg << " is " << to_string(p[i]) << ", expected 1";
    }
  }
  return msg.str();
}

}  // namespace detail

/// Builds F_eps. Requires f(1,0) = g(0,1) = (1, ..., 1) exactly.
inline DegenerationFamily join_family(const CurveMap& f, const CurveMap& g) {
  if (f.n() != g.n()) throw Error("join_family: curves live in different dimensions");
  std::string problems = detail::attachment_violations(f.evaluate(1, 0), "f(1,0)");
  std::string gp = detail::attachment_violations(g.evaluate(0, 1), "g(0,1)");
  if (!gp.empty()) problems += (problems.empty() ? "" : "; ") + gp;
  if (!problems.empty()) throw Error(problems);

  RingPtr ring = chow_ring(f.n(), true);
  const MPoly eps = MPoly::variable(ring, "eps");
  const int d2 = g.d();
  std::vector<SymbolicForm> comps;
  for (int i = 0; i <= f.n(); ++i) {
    // g_i(eps z0, z1): coefficient j picks up eps^(d2 - j).
    std::vector<MPoly> gc;
    for (int j = 0; j <= d2; ++j) gc.push_back(eps.pow(d2 - j) * g[i].coeff(j));
    comps.push_back(to_symbolic(f[i], ring) * SymbolicForm(std::move(gc)));
  }
  return {f, g, ring, std::move(comps)};
}

enum class AttachAt { Start, End };

/// Moves the point f(z*) to A = (1, ..., 1) by a diagonal coordinate change
/// and puts it at parameter (1,0) (Start) or (0,1) (End) by reparametrizing.
inline CurveMap normalize_attachment(const CurveMap& f, const Scalar& z0, const Scalar& z1, AttachAt at) {
  for (int i = 0; i <= f.n(); ++i)
    if (f[i].is_zero()) throw Error("curve lies in coordinate hyperplane x" + std::to_string(i) + " = 0");
  std::vector<Scalar> p = f.evaluate(z0, z1);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (is_zero(p[i])) throw Error("attachment point has zero coordinate " + std::to_string(i));
  // A column equal to z* sends (1,0) or (0,1) to z*; the other column
  // completes it to an invertible matrix.
  Mat2 a;
  Scalar o0 = is_zero(z0) ? Scalar(1) : Scalar(0);
  Scalar o1 = is_zero(z0) ? Scalar(0) : Scalar(1);
  if (at == AttachAt::Start) {
    a = {z0, o0, z1, o1};
  } else {
    a = {o0, z0, o1, z1};
  }
  CurveMap moved = act_gl2(f, a);
  std::vector<std::vector<Scalar>> diag(p.size(), std::vector<Scalar>(p.size(), Scalar(0)));
  for (std::size_t i = 0; i < p.size(); ++i) diag[i][i] = Scalar(1) / p[i];
  return act_gln(moved, diag);
}

namespace detail {

/// Rational parameters t = (t0 : t1) with g(t) proportional to p.
inline std::vector<std::pair<Scalar, Scalar>> rational_preimages(const CurveMap& g, const std::vector<Scalar>& p) {
  std::vector<NumericForm> minors;
  for (int i = 0; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j) {
      NumericForm m = g[i] * p[j] - g[j] * p[i];
      if (!m.is_zero()) minors.push_back(std::move(m));
    }
  std::vector<std::pair<Scalar, Scalar>> out;
  auto fiber = gcd_all(minors);
  if (!fiber || fiber->degree() == 0) return out;
  // Rational roots are looked for at the two endpoints and, when the fiber
  // form is linear, at its single root.
  const NumericForm& h = *fiber;
  if (is_zero(h.evaluate(1, 0))) out.emplace_back(1, 0);
  if (is_zero(h.evaluate(0, 1))) out.emplace_back(0, 1);
  if (h.degree() == 1) {
    // h = a z0 + b z1 vanishes at (b : -a).
    if (!is_zero(h.coeff(0)) && !is_zero(h.coeff(1))) out.emplace_back(h.coeff(1), -h.coeff(0));
  }
  return out;
}

}  // namespace detail

/// Finds a common point of f and g among the images of the parameters (1,0)
/// and (0,1) of either curve, and normalizes both so that f(1,0) = g(0,1) = A.
inline std::pair<CurveMap, CurveMap> attach_pair(const CurveMap& f, const CurveMap& g) {
  if (f.n() != g.n()) throw Error("attach_pair: curves live in different dimensions");
  const std::pair<Scalar, Scalar> ends[] = {{1, 0}, {0, 1}};
  for (const auto& [a, b] : ends) {
    auto pf = f.evaluate(a, b);
    for (const auto& [c, d] : detail::rational_preimages(g, pf)) {
      try {
        return {normalize_attachment(f, a, b, AttachAt::Start), normalize_attachment(g, c, d, AttachAt::End)};
      } catch (const Error&) {
      }
    }
    auto pg = g.evaluate(a, b);
    for (const auto& [c, d] : detail::rational_preimages(f, pg)) {
      try {
        return {normalize_attachment(f, c, d, AttachAt::Start), normalize_attachment(g, a, b, AttachAt::End)};
      } catch (const Error&) {
      }
    }
  }
  throw Error("no common point with all coordinates nonzero found at a curve endpoint");
}

/// Chow form of the family, polynomial in eps.
inline CayleyBiform family_biform(const DegenerationFamily& fam) {
  return cayley_biform_of(fam.n(), fam.components, fam.ring);
}

/// Coefficient of eps^k, moved to the eps-free ring.
inline CayleyBiform eps_coefficient(const CayleyBiform& c, int k) {
  if (!c.has_eps()) return k == 0 ? c : CayleyBiform{c.n, c.d, MPoly(chow_ring(c.n))};
  std::size_t e = c.form.ring()->require("eps");
  return {c.n, c.d, c.form.coefficient_in(e, k).rebased(chow_ring(c.n))};
}

inline int eps_degree(const CayleyBiform& c) {
  if (!c.has_eps()) return c.is_zero() ? -1 : 0;
  return c.form.degree_in(c.form.ring()->require("eps"));
}

/// The biform at a fixed value of eps.
inline CayleyBiform specialize_eps(const CayleyBiform& c, const Scalar& value) {
  if (!c.has_eps()) return c;
  std::vector<std::optional<MPoly>> images(c.form.arity());
  images[c.form.ring()->require("eps")] = MPoly(value);
  MPoly s = c.form.substitute(images);
  return {c.n, c.d, s.rebased(chow_ring(c.n))};
}

/// Projective limit as eps -> 0: the normalized lowest-order coefficient.
inline CayleyBiform limit_direction(const CayleyBiform& c) {
  if (c.is_zero()) throw Error("limit of identically zero family");
  for (int k = 0; k <= eps_degree(c); ++k) {
    CayleyBiform ck = eps_coefficient(c, k);
    if (!ck.is_zero()) return normalize(ck);
  }
  throw Error("limit of identically zero family");
}

/// A * lc(B) == B * lc(A) over the full coefficient tables.
inline bool proportional(const CayleyBiform& a, const CayleyBiform& b) {
  if (a.n != b.n || a.d != b.d) throw Error("proportional: biforms of different shape");
  if (a.is_zero() && b.is_zero()) throw Error("proportional: both biforms are zero");
  if (a.is_zero() || b.is_zero()) return false;
  if (a.form.leading_monomial() != b.form.leading_monomial()) return false;
  return a.form * b.form.leading_coefficient() == b.form * a.form.leading_coefficient();
}

inline CayleyBiform biform_product(const std::vector<CayleyBiform>& parts) {
  if (parts.empty()) throw Error("product of no biforms");
  CayleyBiform r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].n != r.n) throw Error("biform product: dimension mismatch");
    r.form = r.form * parts[i].form;
    r.d += parts[i].d;
  }
  return r;
}

/// Is `limit` (projectively) the product of the component Chow forms?
inline bool boundary_factor_check(const CayleyBiform& limit, const std::vector<CayleyBiform>& parts) {
  int total = 0;
  for (const auto& p : parts) total += p.d;
  if (total != limit.d) throw Error("boundary_factor_check: component degrees do not sum to the limit degree");
  return proportional(limit, biform_product(parts));
}

}  // namespace chow
