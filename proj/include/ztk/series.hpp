#ifndef ZTK_SERIES_HPP
#define ZTK_SERIES_HPP

#include <vector>

#include "ztk/rational.hpp"

namespace ztk {

// Truncated Laurent series in q with exact rational coefficients.  The
// represented exponent window is [leading_exponent, truncation_order); the
// coefficient of q^e for e below the window is exactly zero, and nothing is
// claimed at or beyond the truncation order.  Negative leading exponents are
// allowed (the j-invariant starts at q^-1).
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(long leading_exponent, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, long truncation_order);
    static TruncatedSeries one(long truncation_order)
    {
        return constant(Rational(1), truncation_order);
    }

    long leading_exponent() const { return lead_; }
    long truncation_order() const { return lead_ + static_cast<long>(coeffs_.size()); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Coefficient of q^e; e must be below the truncation order.
    Rational coefficient(long e) const;

    // Same series with the window start advanced past leading zero
    // coefficients (no-op on a window of zeros).
    TruncatedSeries normalized() const;

    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const Rational& c) const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    long lead_ = 0;
    std::vector<Rational> coeffs_;
};

// Exact product truncated to what both factors justify: the result window is
// [la+lb, min(Ta+lb, Tb+la)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse; requires a nonzero coefficient at the leading
// exponent.  The leading exponent negates and a * inverse(a) = 1 up to the
// shared truncation.
TruncatedSeries series_inverse(const TruncatedSeries& a);

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent);

} // namespace ztk

#endif
