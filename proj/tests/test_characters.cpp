#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "ztk/characters.hpp"
#include "ztk/errors.hpp"
#include "ztk/serialize.hpp"

using namespace ztk;

namespace {

// All Dirichlet characters mod m, assembled from characters of the prime
// power factors (cyclic for odd p^e and 4; <-1> x <5> for 2^e, e >= 3).
std::vector<DirichletCharacter> cyclic_characters(unsigned long modulus,
                                                  unsigned long gen,
                                                  unsigned long order)
{
    std::vector<DirichletCharacter> out;
    for (unsigned long j = 0; j < order; ++j) {
        std::vector<long> table(modulus, -1);
        unsigned long x = 1;
        for (unsigned long i = 0; i < order; ++i) {
            table[x] = static_cast<long>(i * j % order);
            x = x * gen % modulus;
        }
        out.push_back(make_character(modulus, order, table));
    }
    return out;
}

std::vector<DirichletCharacter> prime_power_characters(unsigned long q)
{
    if (q <= 2)
        return {principal_character(q)};
    if (q % 2 == 0 && q >= 8) {
        // (Z/2^e)* = <-1> x <5>
        unsigned long half = q / 4;
        std::vector<DirichletCharacter> out;
        for (unsigned long s = 0; s < 2; ++s)
            for (unsigned long j = 0; j < half; ++j) {
                std::vector<long> table(q, -1);
                // enumerate residues as (-1)^a 5^b
                long m1 = s == 0 ? 0 : static_cast<long>(half / 1);
                (void)m1;
                unsigned long base = 1;
                for (unsigned long b = 0; b < half; ++b) {
                    table[base] = static_cast<long>(2 * (b * j % half));
                    table[q - base] = static_cast<long>((2 * (b * j % half) +
                                                         s * half) % (2 * half));
                    base = base * 5 % q;
                }
                out.push_back(make_character(q, 2 * half, table));
            }
        return out;
    }
    // odd prime power or 4: cyclic
    unsigned long phi = euler_phi(q);
    unsigned long gen = 0;
    for (unsigned long g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1)
            continue;
        unsigned long x = 1, ord = 0;
        do {
            x = x * g % q;
            ++ord;
        } while (x != 1);
        if (ord == phi) {
            gen = g;
            break;
        }
    }
    REQUIRE(gen != 0);
    return cyclic_characters(q, gen, phi);
}

std::vector<DirichletCharacter> all_characters(unsigned long m)
{
    std::vector<DirichletCharacter> out{principal_character(1)};
    unsigned long rest = m;
    for (unsigned long p = 2; p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        unsigned long q = 1;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
        }
        std::vector<DirichletCharacter> next;
        for (const auto& a : out)
            for (const auto& b : prime_power_characters(q))
                next.push_back(char_mul(a, b));
        out = std::move(next);
    }
    // keep everything at modulus m even when some factor collapsed
    for (auto& chi : out)
        if (chi.modulus() != m)
            chi = induced(chi, m);
    return out;
}

} // namespace

TEST_CASE("make_character accepts the nontrivial character mod 4")
{
    DirichletCharacter chi = make_character(4, 2, {-1, 0, -1, 1});
    CHECK(chi.order() == 2);
    CHECK(chi.is_odd());
    CHECK(chi.value(3).real() == doctest::Approx(-1.0));
}

TEST_CASE("make_character rejects a zero-set violation")
{
    CHECK_THROWS_AS((void)make_character(4, 2, {-1, 0, 0, 0}), InvalidCharacter);
    CHECK_THROWS_AS((void)make_character(4, 2, {-1, 1, -1, 0}), InvalidCharacter); // chi(1) != 1
}

TEST_CASE("order-4 character mod 5 extends multiplicatively")
{
    // chi(2) = i; 2 generates (Z/5)*: 2,4,3,1
    DirichletCharacter chi = make_character(5, 4, {-1, 0, 1, 3, 2});
    CHECK(chi.order() == 4);
    for (unsigned long a = 1; a < 5; ++a)
        for (unsigned long b = 1; b < 5; ++b) {
            auto ea = chi.exponent(static_cast<long>(a));
            auto eb = chi.exponent(static_cast<long>(b));
            auto eab = chi.exponent(static_cast<long>(a * b % 5));
            CHECK(*eab == (*ea + *eb) % 4);
        }
}

TEST_CASE("kronecker characters match the reciprocity oracle")
{
    for (long D : {-4L, -3L, -7L, -8L, -11L, -15L, -20L, 5L, 8L, 12L, 13L}) {
        DirichletCharacter chi = kronecker_character(D);
        unsigned long m = chi.modulus();
        CHECK(m == static_cast<unsigned long>(std::labs(D)));
        for (unsigned long a = 0; a < m; ++a) {
            int expect = oracles::kronecker_by_reciprocity(D, a);
            auto e = chi.exponent(static_cast<long>(a));
            int got = !e ? 0 : (*e == 0 ? 1 : -1);
            CHECK(got == expect);
        }
    }
    CHECK(kronecker_character(-4).exponent(1L).value() == 0);
    CHECK(kronecker_character(-4).exponent(3L).value() == 1);
    CHECK(kronecker_character(-3).exponent(2L).value() == 1); // chi(2) = -1
}

TEST_CASE("non-fundamental discriminants are rejected")
{
    for (long D : {-5L, 0L, -12L, -9L, 7L, -50L})
        CHECK_THROWS_AS((void)kronecker_character(D), InvalidDiscriminant);
}

TEST_CASE("char_mul identities")
{
    DirichletCharacter chi4 = kronecker_character(-4);
    DirichletCharacter chi3 = kronecker_character(-3);

    CHECK(char_mul(chi4, principal_character(1)) == chi4);

    DirichletCharacter sq = char_mul(chi4, chi4);
    CHECK(sq.modulus() == 4);
    CHECK(sq.is_principal());

    DirichletCharacter prod = char_mul(chi4, chi3);
    CHECK(prod.modulus() == 12);
    DirichletCharacter chi12 = kronecker_character(12);
    CHECK(prod == chi12);
    for (long a = 0; a < 12; ++a) {
        auto combined = prod.value(a);
        auto pointwise = chi4.value(a) * chi3.value(a);
        CHECK(combined.real() == doctest::Approx(pointwise.real()));
        CHECK(combined.imag() == doctest::Approx(pointwise.imag()));
    }
}

TEST_CASE("conductor basics")
{
    CHECK(conductor(kronecker_character(-4)) == 4);
    CHECK(conductor(principal_character(6)) == 1);
    DirichletCharacter lifted = induced(kronecker_character(-4), 8);
    CHECK(conductor(lifted) == 4);
    CHECK(primitive_part(lifted) == kronecker_character(-4));
}

TEST_CASE("every character mod m <= 100 is multiplicative and has sane parity")
{
    for (unsigned long m = 1; m <= 100; ++m) {
        auto chars = all_characters(m);
        CHECK(chars.size() == euler_phi(m));
        for (const auto& chi : chars) {
            // construction already validates multiplicativity; spot check values
            for (unsigned long a = 1; a < m; ++a)
                for (unsigned long b = a; b < m && b < a + 7; ++b) {
                    auto lhs = chi.value(static_cast<long>(a)) *
                               chi.value(static_cast<long>(b));
                    auto rhs = chi.value(static_cast<long>(a * b % std::max(m, 1ul)));
                    CHECK(std::abs(lhs - rhs) < 1e-12);
                }
            auto em1 = chi.exponent(static_cast<long>(m) - 1);
            if (m > 2) {
                REQUIRE(em1.has_value());
                CHECK((*em1 == 0 || 2 * *em1 == chi.order()));
            }
            CHECK(chi.modulus() % conductor(chi) == 0);
        }
    }
}

TEST_CASE("characters induced from their conductor reproduce the original")
{
    for (unsigned long m = 1; m <= 30; ++m) {
        for (const auto& chi : all_characters(m)) {
            DirichletCharacter prim = primitive_part(chi);
            CHECK(prim.modulus() == conductor(chi));
            CHECK(induced(prim, m) == chi);
        }
    }
}

TEST_CASE("character JSON round trip")
{
    DirichletCharacter chi = make_character(5, 4, {-1, 0, 1, 3, 2});
    CHECK(character_from_json(to_json(chi)) == chi);
}

TEST_CASE("make_character rejects a non-multiplicative table")
{
    // chi(4) must be chi(2)^2 = 2 for this order-4 table
    CHECK_THROWS_AS((void)make_character(5, 4, {-1, 0, 1, 3, 3}), InvalidCharacter);
}
