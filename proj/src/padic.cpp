#include "ztk/padic.hpp"

#include <algorithm>
#include <sstream>

#include "ztk/bernoulli.hpp"
#include "ztk/errors.hpp"

namespace ztk {

namespace {

Integer p_power(unsigned long p, long k)
{
    if (k < 0)
        throw InvalidInput("negative power of p where an integer is required");
    return pow(Integer(static_cast<long>(p)), static_cast<unsigned long>(k));
}

void require_odd_prime(unsigned long p)
{
    Integer z(static_cast<long>(p));
    if (p < 3 || mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
        throw InvalidInput("p must be an odd prime");
}

} // namespace

PAdic PAdic::zero(unsigned long p, long known_mod_exponent)
{
    require_odd_prime(p);
    PAdic x(p, 0, Integer(1), 1);
    x.valuation_.reset();
    x.unit_ = 0;
    x.precision_ = known_mod_exponent;
    return x;
}

PAdic::PAdic(unsigned long p, long valuation, const Integer& unit, long precision)
    : p_(p), valuation_(valuation), precision_(precision)
{
    require_odd_prime(p);
    if (precision < 1)
        throw InvalidInput("precision must be >= 1");
    Integer mod = p_power(p, precision);
    unit_ = unit % mod;
    if (unit_ < 0)
        unit_ += mod;
    if (unit_ % static_cast<long>(p) == 0)
        throw InvalidInput("unit part must be coprime to p");
}

long PAdic::valuation() const
{
    if (is_zero())
        throw InvalidInput("valuation of zero is undefined");
    return *valuation_;
}

const Integer& PAdic::unit() const
{
    if (is_zero())
        throw InvalidInput("zero has no unit part");
    return unit_;
}

long PAdic::precision() const
{
    if (is_zero())
        throw InvalidInput("zero tracks only its known exponent");
    return precision_;
}

long PAdic::known_exponent() const
{
    return is_zero() ? precision_ : *valuation_ + precision_;
}

std::vector<unsigned long> PAdic::digits() const
{
    std::vector<unsigned long> out;
    if (is_zero())
        return out;
    Integer u = unit_;
    for (long i = 0; i < precision_; ++i) {
        Integer d = u % static_cast<long>(p_);
        out.push_back(d.get_ui());
        u /= static_cast<long>(p_);
    }
    return out;
}

PAdic PAdic::operator-() const
{
    if (is_zero())
        return *this;
    Integer mod = p_power(p_, precision_);
    return PAdic(p_, *valuation_, mod - unit_, precision_);
}

PAdic operator+(const PAdic& a, const PAdic& b)
{
    if (a.p_ != b.p_)
        throw InvalidInput("mixed primes");
    unsigned long p = a.p_;
    long abs_known = std::min(a.known_exponent(), b.known_exponent());
    if (a.is_zero() && b.is_zero())
        return PAdic::zero(p, abs_known);
    if (a.is_zero() || b.is_zero()) {
        const PAdic& x = a.is_zero() ? b : a;
        if (x.valuation() >= abs_known)
            return PAdic::zero(p, abs_known);
        return PAdic(p, x.valuation(), x.unit(), abs_known - x.valuation());
    }

    long scale = std::min(*a.valuation_, *b.valuation_);
    long window = abs_known - scale;
    if (window <= 0)
        return PAdic::zero(p, abs_known);
    Integer mod = pow(Integer(static_cast<long>(p)), static_cast<unsigned long>(window));
    Integer sum = (a.unit_ * p_power(p, *a.valuation_ - scale) +
                   b.unit_ * p_power(p, *b.valuation_ - scale)) % mod;
    if (sum == 0)
        return PAdic::zero(p, abs_known);
    long shift = p_valuation(sum, Integer(static_cast<long>(p)));
    if (shift >= window)
        return PAdic::zero(p, abs_known);
    Integer unit = sum / p_power(p, shift);
    return PAdic(p, scale + shift, unit, window - shift);
}

PAdic operator-(const PAdic& a, const PAdic& b)
{
    return a + (-b);
}

PAdic operator*(const PAdic& a, const PAdic& b)
{
    if (a.p_ != b.p_)
        throw InvalidInput("mixed primes");
    unsigned long p = a.p_;
    if (a.is_zero() || b.is_zero()) {
        // x = 0 mod p^k times y of valuation v vanishes mod p^(k+v)
        if (a.is_zero() && b.is_zero())
            return PAdic::zero(p, a.precision_ + b.precision_);
        const PAdic& z = a.is_zero() ? a : b;
        const PAdic& x = a.is_zero() ? b : a;
        return PAdic::zero(p, z.precision_ + x.valuation());
    }
    long prec = std::min(a.precision_, b.precision_);
    Integer mod = p_power(p, prec);
    return PAdic(p, *a.valuation_ + *b.valuation_, a.unit_ * b.unit_ % mod, prec);
}

PAdic operator/(const PAdic& a, const PAdic& b)
{
    if (a.p_ != b.p_)
        throw InvalidInput("mixed primes");
    if (b.is_zero())
        throw InvalidInput("division by a value not known to be nonzero");
    unsigned long p = a.p_;
    if (a.is_zero())
        return PAdic::zero(p, a.precision_ - b.valuation());
    long prec = std::min(a.precision_, b.precision_);
    Integer mod = p_power(p, prec);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), mod.get_mpz_t());
    return PAdic(p, *a.valuation_ - *b.valuation_, a.unit_ * inv % mod, prec);
}

bool PAdic::congruent(const PAdic& a, const PAdic& b, long k)
{
    if (a.p_ != b.p_)
        throw InvalidInput("mixed primes");
    if (a.known_exponent() < k || b.known_exponent() < k)
        throw PrecisionError("operands are not known mod p^" + std::to_string(k));
    PAdic d = a - b;
    if (d.is_zero())
        return d.precision_ >= k; // known to vanish at least that far
    return d.valuation() >= k;
}

PAdic PAdic::truncated_to_known(long k) const
{
    if (known_exponent() < k)
        throw PrecisionError("value is not known mod p^" + std::to_string(k));
    if (is_zero())
        return zero(p_, k);
    if (*valuation_ >= k)
        return zero(p_, k);
    return PAdic(p_, *valuation_, unit_, k - *valuation_);
}

std::string PAdic::to_string() const
{
    std::ostringstream os;
    if (is_zero()) {
        os << "0 (mod " << p_ << "^" << precision_ << ")";
        return os.str();
    }
    auto ds = digits();
    os << "...";
    for (auto it = ds.rbegin(); it != ds.rend(); ++it)
        os << *it;
    if (*valuation_ != 0)
        os << " * " << p_ << "^" << *valuation_;
    os << " (mod " << p_ << "^" << known_exponent() << ")";
    return os.str();
}

PAdic padic_embed(const Rational& r, unsigned long p, long precision)
{
    require_odd_prime(p);
    if (precision < 1)
        throw InvalidInput("precision must be >= 1");
    if (r == 0)
        return PAdic::zero(p, precision);
    Integer pz(static_cast<long>(p));
    long vnum = p_valuation(r.get_num(), pz);
    long vden = p_valuation(r.get_den(), pz);
    Integer num = r.get_num() / p_power(p, vnum);
    Integer den = r.get_den() / p_power(p, vden);
    Integer mod = p_power(p, precision);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    Integer unit = num % mod * inv % mod;
    return PAdic(p, vnum - vden, unit, precision);
}

PAdic padic_embed_abs(const Rational& r, unsigned long p, long known_mod_exponent)
{
    require_odd_prime(p);
    if (r == 0)
        return PAdic::zero(p, known_mod_exponent);
    Integer pz(static_cast<long>(p));
    long v = p_valuation(r.get_num(), pz) - p_valuation(r.get_den(), pz);
    long prec = known_mod_exponent - v;
    if (prec < 1)
        return PAdic::zero(p, known_mod_exponent);
    return padic_embed(r, p, prec);
}

PAdic teichmuller(const Integer& c, unsigned long p, long precision)
{
    require_odd_prime(p);
    if (precision < 1)
        throw InvalidInput("precision must be >= 1");
    if (c % static_cast<long>(p) == 0)
        throw InvalidInput("c must be coprime to p");
    Integer mod = p_power(p, precision);
    Integer x = c % mod;
    if (x < 0)
        x += mod;
    // x -> x^p gains one digit of stability per step
    for (long i = 0; i < precision; ++i)
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), p, mod.get_mpz_t());
    return PAdic(p, 0, x, precision);
}

PAdicInterval::PAdicInterval(unsigned long p_, const Integer& alpha_, unsigned long N_)
    : p(p_), alpha(alpha_), N(N_)
{
    require_odd_prime(p);
    if (alpha < 0 || alpha >= pow(Integer(static_cast<long>(p)), N))
        throw InvalidInput("alpha must lie in [0, p^N)");
}

Rational bernoulli_distribution(unsigned long m, const PAdicInterval& I)
{
    Polynomial Bm = bernoulli_polynomial(m);
    Integer pN = pow(Integer(static_cast<long>(I.p)), I.N);
    Rational x = make_rational(I.alpha, pN);
    Rational prefactor;
    if (m >= 1) {
        prefactor = Rational(pow(pN, m - 1));
    } else {
        prefactor = make_rational(Integer(1), pN); // p^(-N) for m = 0
    }
    return prefactor * Bm(x);
}

bool distribution_additivity_check(unsigned long m, const PAdicInterval& I)
{
    Rational whole = bernoulli_distribution(m, I);
    Integer pN = pow(Integer(static_cast<long>(I.p)), I.N);
    Rational sum(0);
    for (unsigned long j = 0; j < I.p; ++j) {
        Integer child = I.alpha + Integer(static_cast<long>(j)) * pN;
        sum += bernoulli_distribution(m, PAdicInterval(I.p, child, I.N + 1));
    }
    return sum == whole;
}

} // namespace ztk
