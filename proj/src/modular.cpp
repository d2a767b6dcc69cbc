#include "ztk/modular.hpp"

#include "ztk/bernoulli.hpp"
#include "ztk/errors.hpp"

namespace ztk {

Integer divisor_sigma(unsigned long k, unsigned long n)
{
    if (n == 0)
        throw InvalidInput("n must be >= 1");
    Integer sum(0);
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        sum += pow(Integer(static_cast<long>(d)), k);
        unsigned long e = n / d;
        if (e != d)
            sum += pow(Integer(static_cast<long>(e)), k);
    }
    return sum;
}

EisensteinSeries eisenstein_series(unsigned long k, long M)
{
    if (k < 2)
        throw InvalidWeight("Eisenstein index must be >= 2");
    if (M < 0)
        throw InvalidInput("order must be >= 0");
    Rational factor = Rational(-4) * static_cast<long>(k) / bernoulli_number(2 * k);
    std::vector<Rational> coeffs(static_cast<std::size_t>(M) + 1, Rational(0));
    coeffs[0] = 1;
    for (long n = 1; n <= M; ++n)
        coeffs[static_cast<std::size_t>(n)] =
            factor * Rational(divisor_sigma(2 * k - 1, static_cast<unsigned long>(n)));
    return {k, TruncatedSeries(0, std::move(coeffs))};
}

PiPower eisenstein_prefactor(unsigned long k)
{
    if (k < 2)
        throw InvalidWeight("Eisenstein index must be >= 2");
    PiPower z = zeta_even(2 * k);
    return {z.coefficient * 2, z.pi_exponent};
}

TruncatedSeries discriminant_series(long M)
{
    if (M < 2)
        throw InvalidInput("order must be >= 2");
    TruncatedSeries e4 = eisenstein_series(2, M).series;
    TruncatedSeries e6 = eisenstein_series(3, M).series;
    TruncatedSeries delta =
        (series_pow(e4, 3) - series_pow(e6, 2)) * make_rational(1, 1728);
    // constant term cancels exactly; expose the cusp form from q^1 on
    if (delta.coefficient(0) != 0)
        throw PrecisionError("discriminant constant term failed to cancel");
    return delta.normalized();
}

TruncatedSeries j_series(long M)
{
    if (M < 1)
        throw InvalidInput("order must be >= 1");
    // j needs M+2 coefficients of everything: delta starts at q^1, so its
    // inverse starts at q^-1 and the product window ends at q^M.
    long work = M + 2;
    TruncatedSeries e4_cubed = series_pow(eisenstein_series(2, work).series, 3);
    TruncatedSeries delta = discriminant_series(work);
    return series_mul(e4_cubed, series_inverse(delta));
}

} // namespace ztk
