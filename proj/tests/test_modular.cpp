#include <doctest.h>

#include "oracles.hpp"
#include "ztk/errors.hpp"
#include "ztk/modular.hpp"

using namespace ztk;

TEST_CASE("divisor sigma")
{
    CHECK(divisor_sigma(3, 1) == 1);
    CHECK(divisor_sigma(3, 2) == 9);
    CHECK(divisor_sigma(5, 2) == 33);
    CHECK(divisor_sigma(0, 12) == 6); // number of divisors
    CHECK(divisor_sigma(1, 28) == 56);
}

TEST_CASE("eisenstein expansions start as the classical tables")
{
    EisensteinSeries e2 = eisenstein_series(2, 6);
    CHECK(e2.weight() == 4);
    CHECK(e2.series.coefficient(0) == 1);
    CHECK(e2.series.coefficient(1) == 240);
    CHECK(e2.series.coefficient(2) == 2160);

    EisensteinSeries e3 = eisenstein_series(3, 6);
    CHECK(e3.series.coefficient(0) == 1);
    CHECK(e3.series.coefficient(1) == -504);

    for (unsigned long k = 2; k <= 7; ++k)
        CHECK(eisenstein_series(k, 0).series.coefficient(0) == 1);

    CHECK_THROWS_AS((void)eisenstein_series(1, 10), InvalidWeight);
}

TEST_CASE("eisenstein coefficient arithmetic: sigma times the weight factor")
{
    EisensteinSeries e2 = eisenstein_series(2, 50);
    for (long n = 1; n <= 50; ++n)
        CHECK(e2.series.coefficient(n) ==
              Rational(divisor_sigma(3, static_cast<unsigned long>(n))) * 240);
}

TEST_CASE("integrality of E_k for k in {2,3,4,5,7}; k = 6 carries 691")
{
    for (unsigned long k : {2ul, 3ul, 4ul, 5ul, 7ul}) {
        EisensteinSeries e = eisenstein_series(k, 50);
        for (long n = 0; n <= 50; ++n)
            CHECK(e.series.coefficient(n).get_den() == 1);
    }
    // 4k/B_2k is not an integer at k = 6: the q-coefficient is 65520/691
    EisensteinSeries e6 = eisenstein_series(6, 2);
    CHECK(e6.series.coefficient(1).get_den() == 691);
    CHECK(e6.series.coefficient(1).get_num() == 65520);
}

TEST_CASE("eisenstein prefactors")
{
    CHECK(eisenstein_prefactor(2) == PiPower{make_rational(1, 45), 4});
    CHECK(eisenstein_prefactor(3) == PiPower{make_rational(2, 945), 6});
}

TEST_CASE("discriminant cusp expansion")
{
    TruncatedSeries delta = discriminant_series(12);
    CHECK(delta.leading_exponent() == 1);
    CHECK(delta.coefficient(1) == 1);
    CHECK(delta.coefficient(2) == -24);
    CHECK(delta.coefficient(3) == 252);
    CHECK(delta.coefficient(4) == -1472);
    for (long n = 1; n <= 12; ++n)
        CHECK(delta.coefficient(n).get_den() == 1);
}

TEST_CASE("discriminant equals the eta product through order 50")
{
    TruncatedSeries delta = discriminant_series(50);
    auto eta = oracles::eta_product_24(50);
    for (long n = 1; n <= 50; ++n)
        CHECK(delta.coefficient(n) == eta[static_cast<std::size_t>(n)]);
}

TEST_CASE("ramanujan tau multiplicativity spot check")
{
    TruncatedSeries delta = discriminant_series(6);
    CHECK(delta.coefficient(6) == delta.coefficient(2) * delta.coefficient(3));
}

TEST_CASE("j-invariant expansion")
{
    TruncatedSeries j = j_series(10);
    CHECK(j.leading_exponent() == -1);
    CHECK(j.coefficient(-1) == 1);
    CHECK(j.coefficient(0) == 744);
    CHECK(j.coefficient(1) == 196884);
    CHECK(j.coefficient(2) == 21493760);
    for (long n = -1; n <= 10; ++n)
        CHECK(j.coefficient(n).get_den() == 1);
}

TEST_CASE("j matches schoolbook long division of E4^3 by delta")
{
    long M = 8;
    TruncatedSeries e4_cubed = series_pow(eisenstein_series(2, M + 2).series, 3);
    TruncatedSeries delta = discriminant_series(M + 2);
    // divide after shifting delta down by q so the divisor has a unit head
    auto inv = oracles::long_division_inverse(delta.coefficients(),
                                              delta.coefficients().size());
    auto quot = oracles::convolution(e4_cubed.coefficients(), inv,
                                     static_cast<std::size_t>(M) + 1);
    TruncatedSeries j = j_series(M);
    for (long n = -1; n < M; ++n)
        CHECK(j.coefficient(n) == quot[static_cast<std::size_t>(n + 1)]);
}

TEST_CASE("j times delta reproduces E4^3 exactly up to truncation")
{
    long M = 12;
    TruncatedSeries prod = series_mul(j_series(M), discriminant_series(M + 2));
    TruncatedSeries e4_cubed = series_pow(eisenstein_series(2, M + 2).series, 3);
    for (long n = 0; n < prod.truncation_order(); ++n)
        CHECK(prod.coefficient(n) == e4_cubed.coefficient(n));
}

TEST_CASE("higher-index eisenstein coefficient factors")
{
    // 4k/B_2k at k = 5 is 264, so E_5 = 1 - 264 sum sigma_9(n) q^n
    EisensteinSeries e5 = eisenstein_series(5, 4);
    for (long n = 1; n <= 4; ++n)
        CHECK(e5.series.coefficient(n) ==
              Rational(divisor_sigma(9, static_cast<unsigned long>(n))) * -264);
}
