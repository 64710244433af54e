#ifndef GRASSCALC_BIGINT_HPP
#define GRASSCALC_BIGINT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace grasscalc {

// Every coefficient in the engine is an exact arbitrary-precision integer
// and every final integral an exact rational. No rounding anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Converts a rational known to be an integer; throws if it is not.
inline Integer exact_integer(const Rational& q) {
  if (!is_integral(q))
    throw std::logic_error("expected integral value, got " + q.get_str());
  return q.get_num();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  return is_integral(q) ? q.get_num().get_str() : q.get_str();
}

}  // namespace grasscalc

#endif
