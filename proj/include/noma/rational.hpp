#ifndef NOMA_RATIONAL_HPP
#define NOMA_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace noma {

// All closed-form probabilities are kept exact; doubles are produced only
// for presentation. GMP provides the arbitrary-precision backing.
using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, k) as an exact big integer; 0 when k > n.
inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational pow_rational(const Rational& base, unsigned long exp) {
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return r;  // base is canonical, so num^e/den^e already is
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// "num/den" when the denominator is not 1, plain integer text otherwise.
std::string to_string(const Rational& q);

/// Parses "4", "5/2" or "2.5" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace noma

#endif  // NOMA_RATIONAL_HPP
