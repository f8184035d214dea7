#pragma once

// Homogeneous forms in (z0, z1) and their GCD.
//
// A degree-d form stores d+1 coefficients; index j multiplies z0^(d-j) z1^j.
// The coefficient type is either Scalar (numeric forms) or MPoly (forms whose
// coefficients carry the symbolic covectors u, v and the parameter eps).

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chow/mpoly.hpp"
#include "chow/scalar.hpp"

namespace chow {

template <class C>
class BinaryForm {
 public:
  BinaryForm() : coeffs_(1, C(0)) {}
  explicit BinaryForm(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("binary form needs at least one coefficient");
  }

  static BinaryForm zero(int degree) { return BinaryForm(std::vector<C>(degree + 1, C(0))); }

  /// c * z0^(degree-j) * z1^j
  static BinaryForm monomial(int degree, int j, const C& c) {
    BinaryForm f = zero(degree);
    f.coeffs_.at(j) = c;
    return f;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& coeff(int j) const { return coeffs_.at(j); }
  C& coeff(int j) { return coeffs_.at(j); }
  std::span<const C> coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return chow::is_zero(c); });
  }

  C evaluate(const Scalar& z0, const Scalar& z1) const {
    C sum(0);
    const int d = degree();
    for (int j = 0; j <= d; ++j) {
      if (chow::is_zero(coeffs_[j])) continue;
      Scalar w = pow(z0, d - j) * pow(z1, j);
      sum += coeffs_[j] * w;
    }
    return sum;
  }

  BinaryForm& operator+=(const BinaryForm& o) {
    require_same_degree(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& o) {
    require_same_degree(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  BinaryForm& operator*=(const C& s) {
    for (auto& c : coeffs_) c = c * s;
    return *this;
  }

  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const C& s) { return a *= s; }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r = zero(a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i) {
      if (chow::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; j <= b.degree(); ++j) {
        if (chow::is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void require_same_degree(const BinaryForm& o) const {
    if (o.degree() != degree()) throw Error("binary forms of different degree");
  }

  std::vector<C> coeffs_;
};

using NumericForm = BinaryForm<Scalar>;
using SymbolicForm = BinaryForm<MPoly>;

inline NumericForm make_form(std::initializer_list<long> coeffs) {
  std::vector<Scalar> c;
  for (long x : coeffs) c.emplace_back(x);
  return NumericForm(std::move(c));
}

inline SymbolicForm to_symbolic(const NumericForm& f, const RingPtr& ring) {
  std::vector<MPoly> c;
  c.reserve(f.coeffs().size());
  for (const auto& s : f.coeffs()) c.emplace_back(ring, s);
  return SymbolicForm(std::move(c));
}

inline std::string to_string(const NumericForm& f) {
  std::vector<Variable> vars{{"z0", Block::Z}, {"z1", Block::Z}};
  RingPtr ring = make_ring(std::move(vars));
  MPoly p(ring);
  const int d = f.degree();
  for (int j = 0; j <= d; ++j) p.add_term(Monomial({d - j, j}), f.coeff(j));
  return to_infix(p);
}

/// 2x2 matrix [[a, b], [c, d]] acting on (z0, z1).
struct Mat2 {
  Scalar a{1}, b{0}, c{0}, d{1};

  Scalar det() const { return Scalar(a * d - b * c); }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// h(phi0(z), phi1(z)) for forms phi0, phi1 of a common degree.
template <class C>
BinaryForm<C> compose(const BinaryForm<C>& h, const BinaryForm<C>& phi0, const BinaryForm<C>& phi1) {
  if (phi0.degree() != phi1.degree()) throw Error("compose: inner forms differ in degree");
  const int d = h.degree();
  const int e = phi0.degree();
  std::vector<BinaryForm<C>> p0{BinaryForm<C>({C(1)})}, p1{BinaryForm<C>({C(1)})};
  for (int k = 1; k <= d; ++k) {
    p0.push_back(p0.back() * phi0);
    p1.push_back(p1.back() * phi1);
  }
  BinaryForm<C> r = BinaryForm<C>::zero(d * e);
  for (int j = 0; j <= d; ++j) {
    if (chow::is_zero(h.coeff(j))) continue;
    r += (p0[d - j] * p1[j]) * h.coeff(j);
  }
  return r;
}

/// h(a z0 + b z1, c z0 + d z1).
template <class C>
BinaryForm<C> bf_substitute_gl2(const BinaryForm<C>& h, const Mat2& m) {
  BinaryForm<C> l0({C(m.a), C(m.b)});
  BinaryForm<C> l1({C(m.c), C(m.d)});
  return compose(h, l0, l1);
}

namespace detail {

// Dense univariate integer polynomials, ascending powers, no trailing zeros.
using ZPoly = std::vector<Integer>;

inline void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Integer content(const ZPoly& p) {
  Integer g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline ZPoly primitive(ZPoly p) {
  if (p.empty()) return p;
  Integer g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
inline ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const int db = deg(b);
  const Integer& lb = b.back();
  int steps = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    Integer la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    --steps;
  }
  for (; steps > 0; --steps)
    for (auto& c : a) c *= lb;
  return a;
}

/// GCD of integer polynomials by the subresultant remainder sequence.
/// Result is primitive with positive leading coefficient; empty if both zero.
inline ZPoly subresultant_gcd(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  if (deg(a) < deg(b)) std::swap(a, b);
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  Integer g(1), h(1);
  while (true) {
    const int delta = deg(a) - deg(b);
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) return primitive(std::move(b));
    if (deg(r) == 0) return ZPoly{Integer(1)};
    Integer divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    // h <- g^delta / h^(delta-1); unchanged when delta == 0.
    if (delta > 0) {
      Integer num(1), den(1);
      for (int i = 0; i < delta; ++i) num *= g;
      for (int i = 0; i < delta - 1; ++i) den *= h;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

inline ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

/// Integer polynomial proportional to the dehomogenization h(t, 1) restricted
/// to coefficients [first, last]: c_first t^(last-first) + ... + c_last.
inline ZPoly dehomogenize(const NumericForm& h, int first, int last) {
  std::vector<Scalar> slice(h.coeffs().begin() + first, h.coeffs().begin() + last + 1);
  Integer l = lcm_of_denominators(slice);
  ZPoly p(last - first + 1);
  for (int j = first; j <= last; ++j) {
    Scalar v = h.coeff(j) * l;
    p[last - j] = v.get_num();
  }
  trim(p);
  return p;
}

inline int first_nonzero(const NumericForm& h) {
  for (int j = 0; j <= h.degree(); ++j)
    if (sgn(h.coeff(j)) != 0) return j;
  return -1;
}

inline int last_nonzero(const NumericForm& h) {
  for (int j = h.degree(); j >= 0; --j)
    if (sgn(h.coeff(j)) != 0) return j;
  return -1;
}

}  // namespace detail

/// Scales a nonzero form to coprime integer coefficients with the first
/// nonzero coefficient (the z0-heaviest term) positive.
inline NumericForm primitive_part(const NumericForm& h) {
  const int first = detail::first_nonzero(h);
  if (first < 0) throw Error("primitive part of zero form");
  std::vector<Scalar> c(h.coeffs().begin(), h.coeffs().end());
  Integer l = lcm_of_denominators(c);
  Integer g(0);
  for (auto& x : c) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (sgn(c[first]) < 0) g = -g;
  for (auto& x : c) x /= g;
  return NumericForm(std::move(c));
}

/// Greatest common divisor of two numeric binary forms, normalized by
/// primitive_part. Degree 0 iff the forms share no projective root.
inline NumericForm bf_gcd(const NumericForm& a, const NumericForm& b) {
  const bool za = a.is_zero(), zb = b.is_zero();
  if (za && zb) throw Error("gcd of zero forms");
  if (za) return primitive_part(b);
  if (zb) return primitive_part(a);

  // Powers of z1 sit at the low indices, powers of z0 at the high ones.
  const int a_first = detail::first_nonzero(a), a_last = detail::last_nonzero(a);
  const int b_first = detail::first_nonzero(b), b_last = detail::last_nonzero(b);
  const int z1_pow = std::min(a_first, b_first);
  const int z0_pow = std::min(a.degree() - a_last, b.degree() - b_last);

  detail::ZPoly g = detail::subresultant_gcd(detail::dehomogenize(a, a_first, a_last),
                                             detail::dehomogenize(b, b_first, b_last));
  const int m = detail::deg(g);
  // Rehomogenize g(t) to degree m, then multiply by z0^z0_pow z1^z1_pow.
  NumericForm r = NumericForm::zero(m + z0_pow + z1_pow);
  for (int j = 0; j <= m; ++j) r.coeff(j + z1_pow) = Scalar(g[m - j]);
  return r;
}

/// Number of distinct projective roots of a nonzero form over C.
inline int distinct_root_count(const NumericForm& h) {
  const int first = detail::first_nonzero(h);
  if (first < 0) throw Error("root count of zero form");
  // Root (1:0) iff z1 divides h, i.e. the z0^d coefficient vanishes.
  int count = first > 0 ? 1 : 0;
  detail::ZPoly p = detail::dehomogenize(h, first, h.degree());
  if (detail::deg(p) > 0) {
    detail::ZPoly g = detail::subresultant_gcd(p, detail::derivative(p));
    count += detail::deg(p) - detail::deg(g);
  }
  return count;
}

}  // namespace chow
