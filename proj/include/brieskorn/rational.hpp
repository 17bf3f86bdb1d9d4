#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace brieskorn {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "a" or "a/b", lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::size_t bit_length(const Integer& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace brieskorn
