#include "ztk/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ztk/errors.hpp"

namespace ztk {

namespace {

unsigned long gcd_ul(unsigned long a, unsigned long b)
{
    while (b) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned long lcm_ul(unsigned long a, unsigned long b)
{
    return a / gcd_ul(a, b) * b;
}

bool is_squarefree(unsigned long n)
{
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0)
            return false;
        while (n % p == 0)
            n /= p;
    }
    return true;
}

} // namespace

std::optional<unsigned long> DirichletCharacter::exponent(const Integer& a) const
{
    Integer r = a % static_cast<long>(modulus_);
    if (r < 0)
        r += static_cast<long>(modulus_);
    long e = values_[r.get_ui()];
    if (e < 0)
        return std::nullopt;
    return static_cast<unsigned long>(e);
}

bool DirichletCharacter::is_odd() const
{
    if (modulus_ <= 2)
        return false;
    // chi(-1) is +-1, so its exponent is 0 or order/2
    return values_[modulus_ - 1] != 0;
}

std::complex<double> DirichletCharacter::value(long a) const
{
    auto e = exponent(Integer(a));
    if (!e)
        return {0.0, 0.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(*e) /
                   static_cast<double>(order_);
    return {std::cos(angle), std::sin(angle)};
}

CyclotomicNumber DirichletCharacter::exact_value(const Integer& a, unsigned long level) const
{
    if (level % order_ != 0)
        throw InvalidInput("character order does not divide requested level");
    auto e = exponent(a);
    if (!e)
        return CyclotomicNumber(level);
    return CyclotomicNumber::root_power(level, *e * (level / order_));
}

DirichletCharacter make_character(unsigned long modulus, unsigned long order,
                                  const std::vector<long>& values)
{
    if (modulus == 0)
        throw InvalidCharacter("modulus must be positive");
    if (order == 0)
        throw InvalidCharacter("order must be positive");
    if (values.size() != modulus)
        throw InvalidCharacter("value table must cover all residues");

    std::vector<unsigned long> units;
    for (unsigned long a = 0; a < modulus; ++a) {
        bool unit = std::gcd(a, modulus) == 1;
        if (unit) {
            if (values[a] < 0 || static_cast<unsigned long>(values[a]) >= order)
                throw InvalidCharacter("unit residue " + std::to_string(a) +
                                       " needs an exponent in [0, order)");
            units.push_back(a);
        } else if (values[a] != -1) {
            throw InvalidCharacter("residue " + std::to_string(a) +
                                   " shares a factor with the modulus and must map to zero");
        }
    }

    unsigned long one = modulus == 1 ? 0 : 1;
    if (values[one] != 0)
        throw InvalidCharacter("chi(1) must be 1");

    for (unsigned long a : units)
        for (unsigned long b : units) {
            unsigned long ab = (a * b) % modulus;
            unsigned long expect = (static_cast<unsigned long>(values[a]) +
                                    static_cast<unsigned long>(values[b])) % order;
            if (static_cast<unsigned long>(values[ab]) != expect)
                throw InvalidCharacter("table is not multiplicative at (" +
                                       std::to_string(a) + ", " + std::to_string(b) + ")");
        }

    // minimal order: divide out the common factor of all exponents
    unsigned long g = order;
    for (unsigned long a : units)
        g = gcd_ul(g, static_cast<unsigned long>(values[a]));
    DirichletCharacter chi;
    chi.modulus_ = modulus;
    chi.order_ = order / g;
    chi.values_ = values;
    if (g > 1)
        for (auto& v : chi.values_)
            if (v > 0)
                v /= static_cast<long>(g);
    return chi;
}

DirichletCharacter principal_character(unsigned long modulus)
{
    std::vector<long> v(modulus);
    for (unsigned long a = 0; a < modulus; ++a)
        v[a] = std::gcd(a, modulus) == 1 ? 0 : -1;
    return make_character(modulus, 1, v);
}

bool is_fundamental_discriminant(long D)
{
    if (D == 0)
        return false;
    long mod4 = ((D % 4) + 4) % 4;
    if (mod4 == 1)
        return is_squarefree(static_cast<unsigned long>(std::labs(D)));
    if (mod4 == 0) {
        long d = D / 4;
        long dmod4 = ((d % 4) + 4) % 4;
        if (dmod4 != 2 && dmod4 != 3)
            return false;
        return is_squarefree(static_cast<unsigned long>(std::labs(d)));
    }
    return false;
}

DirichletCharacter kronecker_character(long D)
{
    if (!is_fundamental_discriminant(D))
        throw InvalidDiscriminant(std::to_string(D) + " is not a fundamental discriminant");
    unsigned long m = static_cast<unsigned long>(std::labs(D));
    if (m == 1)
        return principal_character(1);
    Integer Dz(D);
    std::vector<long> v(m, -1);
    for (unsigned long a = 0; a < m; ++a) {
        if (std::gcd(a, m) != 1)
            continue;
        Integer az(a);
        int k = mpz_kronecker(Dz.get_mpz_t(), az.get_mpz_t());
        v[a] = k == 1 ? 0 : 1;
    }
    return make_character(m, 2, v);
}

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b)
{
    unsigned long m = lcm_ul(a.modulus(), b.modulus());
    unsigned long n = lcm_ul(a.order(), b.order());
    std::vector<long> v(m, -1);
    for (unsigned long r = 0; r < m; ++r) {
        if (std::gcd(r, m) != 1)
            continue;
        auto ea = a.exponent(Integer(static_cast<long>(r)));
        auto eb = b.exponent(Integer(static_cast<long>(r)));
        v[r] = static_cast<long>((*ea * (n / a.order()) + *eb * (n / b.order())) % n);
    }
    return make_character(m, n, v);
}

DirichletCharacter char_pow(const DirichletCharacter& a, unsigned long k)
{
    unsigned long n = a.order();
    std::vector<long> v(a.modulus(), -1);
    for (unsigned long r = 0; r < a.modulus(); ++r) {
        long e = a.table()[r];
        if (e >= 0)
            v[r] = static_cast<long>((static_cast<unsigned long>(e) * (k % n)) % n);
    }
    return make_character(a.modulus(), n, v);
}

unsigned long conductor(const DirichletCharacter& chi)
{
    unsigned long m = chi.modulus();
    for (unsigned long f = 1; f <= m; ++f) {
        if (m % f != 0)
            continue;
        bool ok = true;
        for (unsigned long a = 1; a < m && ok; a += f)
            if (std::gcd(a, m) == 1 && chi.table()[a] != 0)
                ok = false;
        if (ok)
            return f;
    }
    return m;
}

DirichletCharacter primitive_part(const DirichletCharacter& chi)
{
    unsigned long f = conductor(chi);
    unsigned long m = chi.modulus();
    if (f == m)
        return chi;
    std::vector<long> v(f, -1);
    for (unsigned long r = 0; r < f; ++r) {
        if (std::gcd(r, f) != 1)
            continue;
        // lift r to a residue coprime to m in the same class mod f
        unsigned long b = r;
        while (std::gcd(b, m) != 1)
            b += f;
        v[r] = chi.table()[b % m];
    }
    return make_character(f, chi.order(), v);
}

DirichletCharacter induced(const DirichletCharacter& chi, unsigned long new_modulus)
{
    if (new_modulus % chi.modulus() != 0)
        throw InvalidInput("new modulus must be a multiple of the character modulus");
    std::vector<long> v(new_modulus, -1);
    for (unsigned long r = 0; r < new_modulus; ++r)
        if (std::gcd(r, new_modulus) == 1)
            v[r] = chi.table()[r % chi.modulus()];
    return make_character(new_modulus, chi.order(), v);
}

} // namespace ztk
