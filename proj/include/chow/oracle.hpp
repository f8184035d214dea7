#pragma once

// Resultant-free checks on a parametrization: base points, incidence with a
// plane, and the degree of the map onto its image. Everything here goes
// through binary-form GCDs only, so it can cross-check the Chow form.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "chow/binary_form.hpp"
#include "chow/curve.hpp"

namespace chow {

/// Explicit sample stream for the randomized fiber computations.
using Sampler = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20260101;

namespace detail {

inline std::optional<NumericForm> gcd_all(const std::vector<NumericForm>& forms) {
  std::optional<NumericForm> g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    g = g ? bf_gcd(*g, f) : primitive_part(f);
    if (g->degree() == 0) break;
  }
  return g;
}

}  // namespace detail

/// True iff f0..fn have no common projective root.
inline bool base_locus_free(const CurveMap& f) {
  auto g = detail::gcd_all(f.components());
  return g && g->degree() == 0;
}

/// Does f(P^1) meet the plane {<u,x> = <v,x> = 0}? Decided by whether the
/// contractions <f,u> and <f,v> share a root.
inline bool incident_oracle(const CurveMap& f, const Plane& plane) {
  if (plane.n() != f.n()) throw Error("plane and curve live in different dimensions");
  if (!base_locus_free(f)) throw Error("parametrization has base locus");
  NumericForm h1 = f.contract(plane.u);
  NumericForm h2 = f.contract(plane.v);
  // A vanishing contraction puts the whole curve in one hyperplane; a nonzero
  // form of degree >= 1 always has a root over C.
  if (h1.is_zero() || h2.is_zero()) return true;
  return bf_gcd(h1, h2).degree() >= 1;
}

/// Number of distinct parameters over the point f(z*).
inline int fiber_size(const CurveMap& f, const Scalar& z0, const Scalar& z1) {
  std::vector<Scalar> p = f.evaluate(z0, z1);
  std::vector<NumericForm> minors;
  for (int i = 0; i <= f.n(); ++i)
    for (int j = i + 1; j <= f.n(); ++j) {
      NumericForm m = f[i] * p[j] - f[j] * p[i];
      if (!m.is_zero()) minors.push_back(std::move(m));
    }
  if (minors.empty()) throw Error("curve map is constant");
  return distinct_root_count(*detail::gcd_all(minors));
}

/// Generic fiber cardinality of z -> f(z): the minimum fiber size over three
/// random parameters with numerator and denominator in [-20, 20].
inline int map_degree(const CurveMap& f, Sampler& rng) {
  if (!base_locus_free(f)) throw Error("parametrization has base locus");
  std::uniform_int_distribution<long> dist(-20, 20);
  int best = -1;
  for (int trial = 0; trial < 3; ++trial) {
    long a = 0, b = 0;
    while (a == 0 && b == 0) {
      a = dist(rng);
      b = dist(rng);
    }
    int s = fiber_size(f, Scalar(a), Scalar(b));
    best = best < 0 ? s : std::min(best, s);
  }
  return best;
}

inline int map_degree(const CurveMap& f) {
  Sampler rng(kDefaultSeed);
  return map_degree(f, rng);
}

struct UReport {
  bool base_free = false;
  std::optional<int> map_degree;
  std::optional<int> image_degree;
  bool in_U = false;
};

/// Membership in the good locus: no base points and a birational map.
inline UReport in_U(const CurveMap& f, Sampler& rng) {
  UReport r;
  r.base_free = base_locus_free(f);
  if (!r.base_free) return r;
  for (int attempt = 0; attempt < 8; ++attempt) {
    int e = map_degree(f, rng);
    if (f.d() % e != 0) continue;  // non-generic samples only overcount
    r.map_degree = e;
    r.image_degree = f.d() / e;
    r.in_U = e == 1;
    return r;
  }
  throw Error("map degree sampling failed to find a generic fiber");
}

inline UReport in_U(const CurveMap& f) {
  Sampler rng(kDefaultSeed);
  return in_U(f, rng);
}

}  // namespace chow
