#ifndef ZTK_RATIONAL_HPP
#define ZTK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace ztk {

// Exact scalars.  GMP already keeps mpq_class reduced with a positive
// denominator, which is exactly the representation contract we need, so the
// library uses it directly rather than wrapping it.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// "num/den" in base 10, denominator omitted when it is 1.
std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Largest e with p^e | n (n != 0).
long p_valuation(const Integer& n, const Integer& p);

} // namespace ztk

#endif
