#include "ztk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ztk/errors.hpp"

namespace ztk {

unsigned long euler_phi(unsigned long n)
{
    if (n == 0)
        throw InvalidInput("phi(0)");
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

const Polynomial& cyclotomic_polynomial(unsigned long n)
{
    static std::map<unsigned long, Polynomial> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    if (n == 0)
        throw InvalidInput("cyclotomic polynomial level must be >= 1");

    // compute bottom-up so the recursion stays inside the lock
    for (unsigned long k = 1; k <= n; ++k) {
        if (cache.count(k) || n % k != 0)
            continue;
        std::vector<Rational> xk_minus_1(k + 1, Rational(0));
        xk_minus_1[0] = -1;
        xk_minus_1[k] = 1;
        Polynomial phi(std::move(xk_minus_1));
        for (unsigned long d = 1; d < k; ++d) {
            if (k % d != 0)
                continue;
            auto [q, r] = Polynomial::divmod(phi, cache.at(d));
            phi = std::move(q); // remainder is identically zero
        }
        cache.emplace(k, std::move(phi));
    }
    return cache.at(n);
}

CyclotomicNumber::CyclotomicNumber(unsigned long level)
    : level_(level), coeffs_(euler_phi(level), Rational(0))
{
    if (level == 0)
        throw InvalidInput("cyclotomic level must be >= 1");
}

CyclotomicNumber::CyclotomicNumber(unsigned long level, const Rational& value)
    : CyclotomicNumber(level)
{
    coeffs_[0] = value;
}

CyclotomicNumber CyclotomicNumber::root_power(unsigned long level, unsigned long exponent)
{
    return cyclo_reduce(level, Polynomial::monomial(exponent % level));
}

bool CyclotomicNumber::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CyclotomicNumber::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const
{
    if (!is_rational())
        throw InvalidInput("cyclotomic number is not rational");
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.level_ != b.level_)
        throw InvalidInput("cyclotomic levels differ");
    CyclotomicNumber out(a);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] += b.coeffs_[i];
    return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    return a + (-b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.level_ != b.level_)
        throw InvalidInput("cyclotomic levels differ");
    return cyclo_reduce(a.level_,
                        Polynomial(a.coeffs_) * Polynomial(b.coeffs_));
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational& c) const
{
    CyclotomicNumber out(*this);
    for (auto& x : out.coeffs_)
        x *= c;
    return out;
}

std::string CyclotomicNumber::to_string() const
{
    if (is_rational())
        return ztk::to_string(coeffs_[0]);
    std::ostringstream os;
    os << Polynomial(coeffs_).to_string("zeta" + std::to_string(level_));
    return os.str();
}

CyclotomicNumber cyclo_reduce(unsigned long level, const Polynomial& raw)
{
    const Polynomial& phi = cyclotomic_polynomial(level);
    auto [q, r] = Polynomial::divmod(raw, phi);
    CyclotomicNumber out(level);
    const auto& rc = r.coefficients();
    for (std::size_t i = 0; i < rc.size(); ++i)
        out.coeffs_[i] = rc[i];
    return out;
}

} // namespace ztk
