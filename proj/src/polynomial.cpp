#include "ztk/polynomial.hpp"

#include <sstream>

#include "ztk/errors.hpp"

namespace ztk {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c)
{
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t degree) const
{
    if (degree >= coeffs_.size())
        return Rational(0);
    return coeffs_[degree];
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const
{
    std::vector<Rational> v(coeffs_);
    for (auto& x : v)
        x *= c;
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b)
{
    if (b.is_zero())
        throw InvalidInput("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs_);
    const long db = b.degree();
    const Rational& lead = b.coeffs_.back();
    long dr = a.degree();
    if (dr < db)
        return {Polynomial(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(dr - db) + 1,
                               Rational(0));
    while (dr >= db) {
        Rational q = rem[static_cast<std::size_t>(dr)] / lead;
        quot[static_cast<std::size_t>(dr - db)] = q;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] -=
                q * b.coeffs_[static_cast<std::size_t>(i)];
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0)
            --dr;
    }
    rem.resize(static_cast<std::size_t>(dr + 1));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        Rational ac = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0 || ac != 1)
            os << ztk::to_string(ac);
        if (d > 0) {
            if (ac != 1)
                os << "*";
            os << var;
            if (d > 1)
                os << "^" << d;
        }
    }
    return os.str();
}

} // namespace ztk
