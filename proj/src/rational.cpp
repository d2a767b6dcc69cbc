#include "ztk/rational.hpp"

#include "ztk/errors.hpp"

namespace ztk {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw InvalidInput("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw InvalidInput("cannot parse rational '" + s + "'");
    if (r.get_den() == 0)
        throw InvalidInput("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Integer pow(const Integer& base, unsigned long exp)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow(const Rational& base, unsigned long exp)
{
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    return out; // powers of a canonical fraction stay canonical
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

long p_valuation(const Integer& n, const Integer& p)
{
    if (n == 0)
        throw InvalidInput("valuation of zero");
    Integer rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

} // namespace ztk
