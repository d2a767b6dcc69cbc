#ifndef ZTK_CYCLOTOMIC_HPP
#define ZTK_CYCLOTOMIC_HPP

#include <vector>

#include "ztk/polynomial.hpp"
#include "ztk/rational.hpp"

namespace ztk {

unsigned long euler_phi(unsigned long n);

// n-th cyclotomic polynomial, computed by recursive division of x^n - 1 by
// the lower-level cyclotomic polynomials and cached per level.
const Polynomial& cyclotomic_polynomial(unsigned long n);

// Element of Q(zeta_n) as the canonical residue modulo the n-th cyclotomic
// polynomial: a coefficient vector of length phi(n).  Levels 1 and 2 have
// phi = 1, so those values are plain rationals.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(unsigned long level);
    CyclotomicNumber(unsigned long level, const Rational& value);

    unsigned long level() const { return level_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // zeta_level^exponent
    static CyclotomicNumber root_power(unsigned long level, unsigned long exponent);

    bool is_zero() const;
    bool is_rational() const;
    // requires is_rational()
    Rational rational_value() const;

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber operator*(const Rational& c) const;
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) = default;

    std::string to_string() const;

private:
    friend CyclotomicNumber cyclo_reduce(unsigned long level, const Polynomial& raw);
    unsigned long level_ = 1;
    std::vector<Rational> coeffs_;
};

// Canonical residue of a raw polynomial in zeta_level modulo the level-th
// cyclotomic polynomial.
CyclotomicNumber cyclo_reduce(unsigned long level, const Polynomial& raw);

} // namespace ztk

#endif
