#pragma once

// Sparse multivariate polynomials over exact rationals.
//
// Every polynomial carries a Ring: an ordered variable table with block tags.
// Terms are kept in graded-lexicographic order over the declared variable
// order, largest first. Under that order the first declared variable is the
// most significant, so for the Chow ring (u0..un, v0..vn, eps) u0 outranks u1,
// every u outranks every v, and eps comes last.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chow/scalar.hpp"

namespace chow {

enum class Block { Z, U, V, Eps, X, P, Aux };

struct Variable {
  std::string name;
  Block block = Block::Aux;
  friend bool operator==(const Variable&, const Variable&) = default;
};

class Ring {
 public:
  explicit Ring(std::vector<Variable> vars) : vars_(std::move(vars)) {}

  std::size_t arity() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }

  std::size_t require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw Error("unknown variable '" + std::string(name) + "'");
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<Variable> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// u0..un, v0..vn and optionally eps.
inline RingPtr chow_ring(int n, bool with_eps = false) {
  std::vector<Variable> vars;
  for (int i = 0; i <= n; ++i) vars.push_back({"u" + std::to_string(i), Block::U});
  for (int i = 0; i <= n; ++i) vars.push_back({"v" + std::to_string(i), Block::V});
  if (with_eps) vars.push_back({"eps", Block::Eps});
  return make_ring(std::move(vars));
}

/// p_ij for 0 <= i < j <= n, ordered p01, p02, ..., p0n, p12, ...
inline RingPtr plucker_ring(int n) {
  std::vector<Variable> vars;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      vars.push_back({"p" + std::to_string(i) + std::to_string(j), Block::P});
  return make_ring(std::move(vars));
}

/// Point coordinates x0..xn of the ambient space.
inline RingPtr point_ring(int n) {
  std::vector<Variable> vars;
  for (int i = 0; i <= n; ++i) vars.push_back({"x" + std::to_string(i), Block::X});
  return make_ring(std::move(vars));
}

struct Monomial {
  std::vector<int> exps;
  int degree = 0;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {
    for (int x : exps) degree += x;
  }
  static Monomial one(std::size_t arity) { return Monomial(std::vector<int>(arity, 0)); }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.exps.resize(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + o.exps[i];
    r.degree = degree + o.degree;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }

  /// o / *this; requires divides(o).
  Monomial cofactor(const Monomial& o) const {
    Monomial r;
    r.exps.resize(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = o.exps[i] - exps[i];
    r.degree = o.degree - degree;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.exps > b.exps;
  }
};

class MPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

  /// Zero with no ring attached. Ring-free constants adopt the ring of
  /// whatever they are combined with.
  MPoly() = default;
  MPoly(const Scalar& c) { if (!chow::is_zero(c)) terms_.emplace(Monomial{}, c); }  // NOLINT
  MPoly(int c) : MPoly(Scalar(c)) {}                                              // NOLINT
  MPoly(RingPtr ring, const Scalar& c) : ring_(std::move(ring)) {
    if (!chow::is_zero(c)) terms_.emplace(Monomial::one(arity()), c);
  }
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly variable(const RingPtr& ring, std::size_t index) {
    std::vector<int> e(ring->arity(), 0);
    e.at(index) = 1;
    return term(ring, Monomial(std::move(e)), Scalar(1));
  }
  static MPoly variable(const RingPtr& ring, std::string_view name) {
    return variable(ring, ring->require(name));
  }
  static MPoly term(const RingPtr& ring, Monomial m, const Scalar& c) {
    MPoly p(ring);
    if (m.exps.size() != ring->arity()) throw Error("monomial arity does not match ring");
    p.add_term(m, c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t arity() const { return ring_ ? ring_->arity() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree == 0);
  }
  Scalar constant_term() const {
    if (terms_.empty()) return Scalar(0);
    const auto& last = *terms_.rbegin();
    return last.first.degree == 0 ? last.second : Scalar(0);
  }
  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
  }
  const Scalar& leading_coefficient() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
  }

  int degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_)
      if (!m.exps.empty()) d = std::max(d, m.exps[var]);
    return d;
  }

  /// Sum of the terms with exponent k in `var`, that exponent cleared.
  MPoly coefficient_in(std::size_t var, int k) const {
    MPoly r(ring_);
    for (const auto& [m, c] : terms_) {
      int e = m.exps.empty() ? 0 : m.exps[var];
      if (e != k) continue;
      Monomial q = m;
      if (!q.exps.empty()) {
        q.exps[var] = 0;
        q.degree -= k;
      }
      r.terms_.emplace(std::move(q), c);
    }
    return r;
  }

  /// Ring-free polynomials get `ring`; others must already live in it.
  MPoly promoted(const RingPtr& ring) const {
    if (!ring) return *this;
    if (ring_) {
      if (!same_ring(ring_, ring)) throw Error("polynomial ring mismatch");
      return *this;
    }
    MPoly r(ring);
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial::one(ring->arity()), c);
    return r;
  }

  /// Moves the polynomial into `target`, matching variables by name.
  MPoly rebased(const RingPtr& target) const {
    if (!ring_) return promoted(target);
    std::vector<std::optional<std::size_t>> map(ring_->arity());
    for (std::size_t i = 0; i < ring_->arity(); ++i) map[i] = target->index_of((*ring_)[i].name);
    MPoly r(target);
    for (const auto& [m, c] : terms_) {
      std::vector<int> e(target->arity(), 0);
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!map[i]) throw Error("variable '" + (*ring_)[i].name + "' missing from target ring");
        e[*map[i]] = m.exps[i];
      }
      r.add_term(Monomial(std::move(e)), c);
    }
    return r;
  }

  Scalar evaluate(std::span<const Scalar> values) const {
    if (!ring_) return constant_term();
    if (values.size() != arity()) throw Error("evaluate: wrong number of values");
    Scalar sum(0);
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < m.exps.size(); ++i)
        for (int k = 0; k < m.exps[i]; ++k) t *= values[i];
      sum += t;
    }
    return sum;
  }

  /// Replaces variable i by images[i] where present. Images must live in
  /// `target` (or be ring-free); unreplaced variables are carried over by name.
  MPoly substitute(const std::vector<std::optional<MPoly>>& images, const RingPtr& target) const;
  MPoly substitute(const std::vector<std::optional<MPoly>>& images) const {
    return substitute(images, ring_);
  }

  MPoly derivative(std::size_t var) const {
    MPoly r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m.exps.empty() || m.exps[var] == 0) continue;
      Monomial q = m;
      q.exps[var] -= 1;
      q.degree -= 1;
      r.add_term(q, c * m.exps[var]);
    }
    return r;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) { return accumulate(o, Scalar(1)); }
  MPoly& operator-=(const MPoly& o) { return accumulate(o, Scalar(-1)); }

  MPoly& operator*=(const Scalar& s) {
    if (chow::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Scalar& s) { return a *= s; }
  friend MPoly operator*(const Scalar& s, MPoly a) { return a *= s; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    RingPtr ring = join(a, b);
    MPoly r(ring);
    if (a.is_zero() || b.is_zero()) return r;
    const MPoly pa = a.promoted(ring);
    const MPoly pb = b.promoted(ring);
    Scalar prod;
    for (const auto& [ma, ca] : pa.terms_)
      for (const auto& [mb, cb] : pb.terms_) {
        prod = ca * cb;
        r.add_term(ma * mb, prod);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(unsigned e) const {
    MPoly r = MPoly(1).promoted_or_free(ring_);
    MPoly base = *this;
    while (e) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
    if (!a.ring_ || !b.ring_) {
      // Ring-free values are constants; compare as such.
      if (!a.is_constant() || !b.is_constant()) return false;
      return a.constant_term() == b.constant_term();
    }
    return a.terms_ == b.terms_;
  }

  /// Adds c*m, merging with an existing term and dropping zeros.
  void add_term(const Monomial& m, const Scalar& c) {
    if (chow::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (chow::is_zero(it->second)) terms_.erase(it);
    }
  }

  static RingPtr join(const MPoly& a, const MPoly& b) {
    if (!a.ring_) return b.ring_;
    if (!b.ring_) return a.ring_;
    if (!same_ring(a.ring_, b.ring_)) throw Error("polynomial ring mismatch");
    return a.ring_;
  }

 private:
  MPoly promoted_or_free(const RingPtr& ring) const { return ring ? promoted(ring) : *this; }

  MPoly& accumulate(const MPoly& o, const Scalar& sign) {
    if (o.is_zero()) return *this;
    if (&o == this) {
      const MPoly copy = o;
      return accumulate(copy, sign);
    }
    RingPtr ring = join(*this, o);
    if (ring && !ring_) *this = promoted(ring);
    if (ring && !o.ring_) {
      add_term(Monomial::one(arity()), sign * o.constant_term());
      return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, sign * c);
    return *this;
  }

  RingPtr ring_;
  TermMap terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

inline MPoly MPoly::substitute(const std::vector<std::optional<MPoly>>& images,
                               const RingPtr& target) const {
  if (images.size() != arity()) throw Error("substitute: wrong number of images");
  // Unreplaced variables map to the same-named variable of the target ring.
  std::vector<MPoly> base(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    if (images[i]) {
      base[i] = images[i]->ring() ? *images[i] : images[i]->promoted(target);
    } else {
      base[i] = MPoly::variable(target, (*ring_)[i].name);
    }
  }
  std::vector<std::vector<MPoly>> powers(arity());
  auto power = [&](std::size_t i, int k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly(target, Scalar(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base[i]);
    return cache[k];
  };
  MPoly r(target);
  for (const auto& [m, c] : terms_) {
    MPoly t(target, c);
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i]) t = t * power(i, m.exps[i]);
    r += t;
  }
  return r;
}

/// Returns q with dividend = divisor * q, or nullopt when the division is not
/// exact. Division proceeds term by term against the leading term of the
/// divisor in graded-lex order.
inline std::optional<MPoly> poly_divides(const MPoly& divisor, const MPoly& dividend) {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  RingPtr ring = MPoly::join(divisor, dividend);
  if (!ring) {
    // Both ring-free constants.
    return MPoly(dividend.constant_term() / divisor.constant_term());
  }
  const MPoly a = divisor.promoted(ring);
  MPoly r = dividend.promoted(ring);
  MPoly q(ring);
  const Monomial& lm = a.leading_monomial();
  const Scalar& lc = a.leading_coefficient();
  Scalar factor;
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = lm.cofactor(rm);
    factor = r.leading_coefficient() / lc;
    q.add_term(qm, factor);
    for (const auto& [m, c] : a.terms()) r.add_term(m * qm, -(factor * c));
  }
  return q;
}

/// dividend / divisor; throws when the division is not exact.
inline MPoly exact_quotient(const MPoly& dividend, const MPoly& divisor) {
  auto q = poly_divides(divisor, dividend);
  if (!q) throw Error("inexact polynomial division");
  return *std::move(q);
}

/// Splits p = content * primitive where the primitive part has coprime
/// integer coefficients and a positive leading coefficient.
inline std::pair<Scalar, MPoly> content_primitive(const MPoly& p) {
  if (p.is_zero()) throw Error("content of zero polynomial");
  Integer den(1), num(0);
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : p.terms()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Scalar content(num, den);
  content.canonicalize();
  if (sgn(p.leading_coefficient()) < 0) content = -content;
  MPoly q = p;
  q *= Scalar(1) / content;
  return {content, q};
}

// -- text formats -----------------------------------------------------------

/// One term per line, largest first: `+c * u0^a v1^b [* eps^k]`.
/// Variables of the Eps block are written as separate `* name^k` factors.
inline std::string to_term_lines(const MPoly& p) {
  if (p.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [m, c] : p.terms()) {
    out << (sgn(c) < 0 ? '-' : '+') << to_string(abs(c));
    std::string group, eps;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      const Variable& v = (*p.ring())[i];
      std::string factor = v.name + "^" + std::to_string(m.exps[i]);
      if (v.block == Block::Eps) {
        eps += " * " + factor;
      } else {
        group += group.empty() ? factor : " " + factor;
      }
    }
    if (!group.empty()) out << " * " << group;
    out << eps << '\n';
  }
  return out.str();
}

/// Parses the output of to_term_lines. Blank lines and lines starting with
/// '#' are skipped.
inline MPoly parse_term_lines(const RingPtr& ring, std::string_view text) {
  MPoly result(ring);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok) || tok.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error("term line " + std::to_string(line_no) + ": " + why);
    };
    Scalar coeff;
    if (!try_parse_scalar(tok, coeff)) throw fail("bad coefficient '" + tok + "'");
    std::vector<int> e(ring->arity(), 0);
    while (tokens >> tok) {
      if (tok == "*") continue;
      auto caret = tok.find('^');
      std::string name = tok.substr(0, caret);
      int exp = 1;
      if (caret != std::string::npos) {
        try {
          exp = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
          throw fail("bad exponent in '" + tok + "'");
        }
      }
      auto idx = ring->index_of(name);
      if (!idx) throw fail("unknown variable '" + name + "'");
      e[*idx] += exp;
    }
    result.add_term(Monomial(std::move(e)), coeff);
  }
  return result;
}

/// Human-readable infix form, e.g. `x0*x2 - x1^2`.
inline std::string to_infix(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += (*p.ring())[i].name;
      if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
    }
    if (mono.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

}  // namespace chow
