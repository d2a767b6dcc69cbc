#include <numeric>
#include <vector>

#include "ztk/bernoulli.hpp"
#include "ztk/errors.hpp"
#include "ztk/padic.hpp"

namespace ztk {

namespace {

void require_odd_prime(unsigned long p)
{
    Integer z(static_cast<long>(p));
    if (p < 3 || mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
        throw InvalidInput("p must be an odd prime");
}

// the recurrence behind bernoulli_number is quadratic; indices past this
// stop being interactive
constexpr unsigned long kMaxInterpolationIndex = 1500;

void check_branch(unsigned long p, unsigned long a)
{
    if (a % 2 != 0 || a > p - 3)
        throw InvalidBranch("branch must be even and in [0, p-3]");
}

unsigned long mod_pow_ul(unsigned long base, unsigned long exp, unsigned long mod)
{
    Integer out;
    Integer b(static_cast<long>(base));
    Integer m(static_cast<long>(mod));
    mpz_powm_ui(out.get_mpz_t(), b.get_mpz_t(), exp, m.get_mpz_t());
    return out.get_ui();
}

PAdic zeta_at_index(unsigned long p, unsigned long m, long known)
{
    Rational euler = Rational(1) - Rational(pow(Integer(static_cast<long>(p)), m - 1));
    Rational value = -(euler * bernoulli_number(m) / Rational(static_cast<long>(m)));
    return padic_embed_abs(value, p, known);
}

} // namespace

std::vector<unsigned long> zeta_branches(unsigned long p)
{
    require_odd_prime(p);
    std::vector<unsigned long> out;
    for (unsigned long a = 0; a + 3 <= p; a += 2)
        out.push_back(a);
    return out;
}

PAdic zeta_interpolation_value(unsigned long p, unsigned long m, long known_mod_exponent)
{
    require_odd_prime(p);
    if (m < 2 || m % 2 != 0)
        throw InvalidInput("interpolation index must be even and >= 2");
    if (m % p == 0)
        throw InvalidInput("interpolation index must not be divisible by p");
    if (m > kMaxInterpolationIndex)
        throw PrecisionError("interpolation index " + std::to_string(m) + " is too large");
    return zeta_at_index(p, m, known_mod_exponent);
}

PAdic padic_zeta(unsigned long p, unsigned long a, long s, long N)
{
    require_odd_prime(p);
    check_branch(p, a);
    if (N < 0)
        throw InvalidInput("precision must be >= 0");
    if (a == 0 && s == 1)
        throw PoleError("zeta_{p,0} has a simple pole at s = 1");

    long m0 = 1 - s;
    if (m0 >= 2 && m0 % 2 == 0 &&
        (m0 - static_cast<long>(a)) % static_cast<long>(p - 1) == 0 &&
        m0 % static_cast<long>(p) != 0) {
        // s is itself an interpolation node: evaluate there exactly
        return zeta_interpolation_value(p, static_cast<unsigned long>(m0), N + 1);
    }

    Integer pN = pow(Integer(static_cast<long>(p)), static_cast<unsigned long>(N));
    Integer t = Integer(1 - s) % pN;
    if (t < 0)
        t += pN;
    if (N >= 1 && t % static_cast<long>(p) == 0)
        throw InvalidInput("no admissible interpolation index: 1-s = 0 (mod p); "
                           "lower the precision");

    // least positive m = a (mod p-1), m = t (mod p^N)
    Integer inv;
    Integer pm1(static_cast<long>(p - 1));
    mpz_invert(inv.get_mpz_t(), pm1.get_mpz_t(), pN.get_mpz_t());
    Integer k = (t - static_cast<long>(a)) % pN * inv % pN;
    if (k < 0)
        k += pN;
    Integer m = Integer(static_cast<long>(a)) + pm1 * k;
    Integer step = pm1 * pN;
    while (m < 2 || m % static_cast<long>(p) == 0)
        m += step;
    if (m > static_cast<long>(kMaxInterpolationIndex))
        throw PrecisionError("interpolation index " + m.get_str() + " is too large");
    return zeta_at_index(p, m.get_ui(), N + 1);
}

PAdic padic_zeta(unsigned long p, unsigned long a, const PAdic& s, long N)
{
    require_odd_prime(p);
    check_branch(p, a);
    if (N < 0)
        throw InvalidInput("precision must be >= 0");
    if (s.prime() != p)
        throw InvalidInput("s lives over a different prime");
    if (!s.is_zero() && s.valuation() < 0)
        throw InvalidInput("s must be a p-adic integer");
    if (s.known_exponent() < N)
        throw PrecisionError("s is not known mod p^" + std::to_string(N));

    // residue of s mod p^N
    Integer pN = pow(Integer(static_cast<long>(p)), static_cast<unsigned long>(N));
    if (pN > 1000000000)
        throw PrecisionError("requested precision is out of range");
    Integer sres(0);
    if (!s.is_zero() && s.valuation() < N)
        sres = s.unit() * pow(Integer(static_cast<long>(p)),
                              static_cast<unsigned long>(s.valuation())) % pN;
    Integer t = (Integer(1) - sres) % pN;
    if (t < 0)
        t += pN;
    if (N >= 1 && t % static_cast<long>(p) == 0) {
        if (a == 0)
            throw PoleError("s = 1 (mod p^N): not separated from the pole at s = 1");
        throw InvalidInput("no admissible interpolation index: 1-s = 0 (mod p); "
                           "lower the precision");
    }
    long s_int = static_cast<long>(mpz_get_si(Integer(sres).get_mpz_t()));
    return padic_zeta(p, a, s_int, N);
}

unsigned long smallest_primitive_root(unsigned long p)
{
    require_odd_prime(p);
    std::vector<unsigned long> prime_factors;
    unsigned long m = p - 1;
    for (unsigned long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_factors.push_back(q);
            while (m % q == 0)
                m /= q;
        }
    }
    if (m > 1)
        prime_factors.push_back(m);
    for (unsigned long g = 2; g < p; ++g) {
        bool primitive = true;
        for (unsigned long q : prime_factors)
            if (mod_pow_ul(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        if (primitive)
            return g;
    }
    throw InvalidInput("no primitive root found (p not prime?)");
}

DirichletCharacter omega_character(unsigned long p)
{
    require_odd_prime(p);
    unsigned long g = smallest_primitive_root(p);
    std::vector<long> table(p, -1);
    unsigned long x = 1;
    for (unsigned long i = 0; i < p - 1; ++i) {
        table[x] = static_cast<long>(i);
        x = x * g % p;
    }
    return make_character(p, p - 1, table);
}

PAdic padic_L(unsigned long p, const DirichletCharacter& chi, unsigned long n, long N)
{
    require_odd_prime(p);
    if (n == 0)
        throw InvalidInput("n must be >= 1");
    if (N < 0)
        throw InvalidInput("precision must be >= 0");
    if ((p - 1) % chi.order() != 0)
        throw UnsupportedCharacter("character order " + std::to_string(chi.order()) +
                                   " does not embed in Z_" + std::to_string(p));
    if (chi.is_odd())
        return PAdic::zero(p, N + 1);

    // twist chi by omega^-n; the product keeps the modulus multiple of p,
    // so its generalized Bernoulli number carries the Euler factor at p
    unsigned long k = (p - 1 - n % (p - 1)) % (p - 1);
    DirichletCharacter eta = char_mul(chi, char_pow(omega_character(p), k));
    unsigned long f = eta.modulus();
    unsigned long t = eta.order();

    // B_{n,eta} = sum_j zeta_(p-1)^j C_j with exact rational C_j
    Polynomial Bn = bernoulli_polynomial(n);
    Rational prefactor = pow(Rational(static_cast<long>(f)), n - 1);
    std::vector<Rational> C(p - 1, Rational(0));
    for (unsigned long r = 1; r <= f; ++r) {
        auto e = eta.exponent(Integer(static_cast<long>(r)));
        if (!e)
            continue;
        unsigned long j = *e * ((p - 1) / t);
        C[j] += Bn(make_rational(static_cast<long>(r), static_cast<long>(f)));
    }

    Integer pz(static_cast<long>(p));
    long c = 0;
    for (auto& Cj : C) {
        Cj *= prefactor;
        if (Cj != 0) {
            long v = p_valuation(Cj.get_num(), pz) - p_valuation(Cj.get_den(), pz);
            c = std::max(c, -v);
        }
    }
    long vn = p_valuation(Integer(static_cast<long>(n)), pz);
    long A = (N + 1) + 1 + c + vn;

    PAdic root = teichmuller(Integer(static_cast<long>(smallest_primitive_root(p))), p, A);
    Integer modA = pow(pz, static_cast<unsigned long>(A));
    Integer zj(1);
    PAdic B = PAdic::zero(p, A);
    for (unsigned long j = 0; j < p - 1; ++j) {
        if (C[j] != 0) {
            PAdic term = PAdic(p, 0, zj, A) * padic_embed(C[j], p, A);
            B = B + term;
        }
        zj = zj * root.unit() % modA;
    }

    PAdic L = B * padic_embed(make_rational(-1, static_cast<long>(n)), p, A);
    return L.truncated_to_known(N + 1);
}

} // namespace ztk
