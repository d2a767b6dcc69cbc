#include "ztk/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "ztk/errors.hpp"

namespace ztk {

Rational bernoulli_number(unsigned long m)
{
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    for (unsigned long k = table.size(); k <= m; ++k) {
        if (k > 2 && k % 2 == 1) {
            table.emplace_back(0);
            continue;
        }
        Rational acc(0);
        for (unsigned long j = 0; j < k; ++j) {
            if (table[j] == 0)
                continue;
            acc += Rational(binomial(k + 1, j)) * table[j];
        }
        acc /= static_cast<long>(k + 1);
        table.push_back(-acc);
    }
    return table[m];
}

Polynomial bernoulli_polynomial(unsigned long m)
{
    std::vector<Rational> coeffs(m + 1, Rational(0));
    for (unsigned long k = 0; k <= m; ++k) {
        // coefficient of x^(m-k) is C(m,k) B_k
        coeffs[m - k] = Rational(binomial(m, k)) * bernoulli_number(k);
    }
    return Polynomial(std::move(coeffs));
}

Integer rational_mod(const Rational& r, const Integer& M)
{
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), M.get_mpz_t()) == 0)
        throw InvalidInput("denominator not invertible mod " + M.get_str());
    Integer out = (r.get_num() % M) * inv % M;
    if (out < 0)
        out += M;
    return out;
}

CongruenceReport voronoi_check(const Integer& a, const Integer& N, unsigned long m)
{
    if (N < 2)
        throw InvalidInput("modulus N must be >= 2");
    if (m == 0)
        throw InvalidInput("m must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), N.get_mpz_t());
    if (g != 1)
        throw InvalidInput("a and N must be coprime");

    Integer ar = a % N;
    if (ar < 0)
        ar += N;

    Rational B = bernoulli_number(2 * m);
    const Integer& P = B.get_num();
    const Integer& Q = B.get_den();

    Integer lhs;
    mpz_powm_ui(lhs.get_mpz_t(), ar.get_mpz_t(), 2 * m, N.get_mpz_t());
    lhs = (lhs - 1) * (P % N) % N;
    if (lhs < 0)
        lhs += N;

    Integer sum(0);
    Integer spow, floor_term;
    for (Integer s(1); s < N; ++s) {
        mpz_powm_ui(spow.get_mpz_t(), s.get_mpz_t(), 2 * m - 1, N.get_mpz_t());
        floor_term = s * ar / N;
        sum = (sum + spow * (floor_term % N)) % N;
    }
    Integer rhs;
    mpz_powm_ui(rhs.get_mpz_t(), ar.get_mpz_t(), 2 * m - 1, N.get_mpz_t());
    rhs = rhs * (2 * m) % N * (Q % N) % N * sum % N;
    if (rhs < 0)
        rhs += N;

    return {N, lhs, rhs, lhs == rhs};
}

namespace {

bool is_prime_ul(unsigned long p)
{
    Integer z(static_cast<long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

} // namespace

CongruenceReport kummer_check(unsigned long p, unsigned long m, unsigned long n,
                              unsigned long N)
{
    if (p < 3 || !is_prime_ul(p))
        throw InvalidInput("p must be an odd prime");
    if (m == 0 || m % 2 != 0 || n == 0 || n % 2 != 0)
        throw InvalidInput("m and n must be even positive");
    if (m % (p - 1) == 0 || n % (p - 1) == 0)
        throw InvalidInput("p-1 must divide neither m nor n");
    if (m % p == 0 || n % p == 0)
        throw InvalidInput("p must divide neither m nor n");
    Integer step = pow(Integer(static_cast<long>(p)), N) * (static_cast<long>(p) - 1);
    if ((Integer(static_cast<long>(m)) - static_cast<long>(n)) % step != 0)
        throw InvalidInput("m and n must be congruent mod (p-1)p^N");

    Integer M = pow(Integer(static_cast<long>(p)), N + 1);
    auto side = [&](unsigned long k) {
        Rational euler = Rational(1) - Rational(pow(Integer(static_cast<long>(p)), k - 1));
        Rational val = euler * bernoulli_number(k) / Rational(static_cast<long>(k));
        return rational_mod(val, M);
    };
    Integer lhs = side(m);
    Integer rhs = side(n);
    return {M, lhs, rhs, lhs == rhs};
}

CyclotomicNumber generalized_bernoulli(unsigned long n, const DirichletCharacter& chi)
{
    if (n == 0)
        throw InvalidInput("n must be >= 1");
    unsigned long f = chi.modulus();
    unsigned long level = chi.order();
    Polynomial Bn = bernoulli_polynomial(n);
    Rational prefactor = pow(Rational(static_cast<long>(f)), n - 1);

    CyclotomicNumber acc(level);
    for (unsigned long r = 1; r <= f; ++r) {
        auto e = chi.exponent(Integer(static_cast<long>(r)));
        if (!e)
            continue;
        Rational term = Bn(make_rational(static_cast<long>(r), static_cast<long>(f)));
        acc = acc + CyclotomicNumber::root_power(level, *e) * term;
    }
    return acc * prefactor;
}

} // namespace ztk
