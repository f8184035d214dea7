#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chow {

/// Base error type for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number. GMP keeps it canonical: reduced, positive
/// denominator, zero stored as 0/1.
using Scalar = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Parses "p" or "p/q" (optional sign, decimal digits only).
/// Returns false on malformed input or a zero denominator.
inline bool try_parse_scalar(std::string_view text, Scalar& out) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den)) return false;
  }
  std::string_view body = num;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!digits(body)) return false;
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d(1);
  if (!den.empty()) {
    d = Integer(std::string(den));
    if (sgn(d) == 0) return false;
  }
  out = Scalar(n, d);
  out.canonicalize();
  return true;
}

inline Scalar parse_scalar(std::string_view text) {
  Scalar s;
  if (!try_parse_scalar(text, s)) throw Error("invalid rational '" + std::string(text) + "'");
  return s;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

inline Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar r(1);
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

inline Integer lcm_of_denominators(const std::vector<Scalar>& values) {
  Integer l(1);
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

/// Uniform integer in [lo, hi] as a Scalar.
template <class Rng>
Scalar random_integer(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return Scalar(dist(rng));
}

}  // namespace chow
