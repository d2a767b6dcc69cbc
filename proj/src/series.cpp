#include "ztk/series.hpp"

#include <algorithm>

#include "ztk/errors.hpp"

namespace ztk {

TruncatedSeries::TruncatedSeries(long leading_exponent, std::vector<Rational> coeffs)
    : lead_(leading_exponent), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw InvalidInput("series needs a nonempty coefficient window");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long truncation_order)
{
    if (truncation_order <= 0)
        throw InvalidInput("truncation order must be positive for a constant");
    std::vector<Rational> v(static_cast<std::size_t>(truncation_order), Rational(0));
    v[0] = c;
    return TruncatedSeries(0, std::move(v));
}

Rational TruncatedSeries::coefficient(long e) const
{
    if (e >= truncation_order())
        throw InvalidInput("coefficient beyond truncation order");
    if (e < lead_)
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(e - lead_)];
}

TruncatedSeries TruncatedSeries::normalized() const
{
    std::size_t skip = 0;
    while (skip + 1 < coeffs_.size() && coeffs_[skip] == 0)
        ++skip;
    if (skip == 0)
        return *this;
    return TruncatedSeries(lead_ + static_cast<long>(skip),
                           std::vector<Rational>(coeffs_.begin() + static_cast<long>(skip),
                                                 coeffs_.end()));
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const
{
    TruncatedSeries out(*this);
    for (auto& x : out.coeffs_)
        x *= c;
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    long lead = std::min(a.lead_, b.lead_);
    long trunc = std::min(a.truncation_order(), b.truncation_order());
    if (trunc <= lead)
        throw InvalidInput("series windows do not overlap");
    std::vector<Rational> v(static_cast<std::size_t>(trunc - lead), Rational(0));
    for (long e = lead; e < trunc; ++e) {
        Rational c(0);
        if (e >= a.lead_)
            c += a.coeffs_[static_cast<std::size_t>(e - a.lead_)];
        if (e >= b.lead_)
            c += b.coeffs_[static_cast<std::size_t>(e - b.lead_)];
        v[static_cast<std::size_t>(e - lead)] = c;
    }
    return TruncatedSeries(lead, std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a + (-b);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    // exponent e of the product is fully determined only while every split
    // e = i + j stays inside both windows
    std::size_t n = std::min(ca.size(), cb.size());
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (ca[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (cb[j] == 0)
                continue;
            v[i + j] += ca[i] * cb[j];
        }
    }
    return TruncatedSeries(a.leading_exponent() + b.leading_exponent(), std::move(v));
}

TruncatedSeries series_inverse(const TruncatedSeries& a)
{
    const auto& c = a.coefficients();
    if (c[0] == 0)
        throw InvalidInput("series inverse needs a unit leading coefficient");
    std::vector<Rational> v(c.size(), Rational(0));
    Rational u = 1 / c[0];
    v[0] = u;
    for (std::size_t k = 1; k < c.size(); ++k) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i)
            acc += c[i] * v[k - i];
        v[k] = -u * acc;
    }
    return TruncatedSeries(-a.leading_exponent(), std::move(v));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent)
{
    if (exponent == 0)
        return TruncatedSeries::one(a.truncation_order() - a.leading_exponent());
    TruncatedSeries out = a;
    for (unsigned i = 1; i < exponent; ++i)
        out = series_mul(out, a);
    return out;
}

} // namespace ztk
