#ifndef DLOG_RATIONAL_HPP
#define DLOG_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dlog
{

// Exact fraction, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "p/q", "-p/q" or a terminating decimal such as "0.25".
Rational parse_rational(std::string_view text);

// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational &r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// r (r-1) ... (r-k+1) / k!, for any rational r.
Rational gen_binomial(const Rational &r, unsigned k);

// r^e for a (possibly negative) integer exponent. 0^0 is 1.
Rational pow(const Rational &r, long e);

inline bool is_integer(const Rational &r) { return r.get_den() == 1; }

} // namespace dlog

#endif
