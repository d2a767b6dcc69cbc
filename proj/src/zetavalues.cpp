#include "ztk/zetavalues.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ztk/bernoulli.hpp"
#include "ztk/errors.hpp"

namespace ztk {

double PiPower::numeric() const
{
    return coefficient.get_d() * std::pow(std::numbers::pi, pi_exponent);
}

std::string PiPower::to_string() const
{
    if (pi_exponent == 0)
        return ztk::to_string(coefficient);
    std::string s = ztk::to_string(coefficient) + " * pi";
    if (pi_exponent > 1)
        s += "^" + std::to_string(pi_exponent);
    return s;
}

PiPower zeta_even(unsigned long two_m)
{
    if (two_m == 0 || two_m % 2 != 0)
        throw InvalidInput("argument must be a positive even integer");
    unsigned long m = two_m / 2;
    Rational c = Rational(pow(Integer(2), two_m)) * bernoulli_number(two_m) /
                 (Rational(2) * Rational(factorial(two_m)));
    if (m % 2 == 0)
        c = -c;
    return {c, static_cast<unsigned>(two_m)};
}

Rational zeta_negative(unsigned long n)
{
    if (n == 0)
        throw InvalidInput("n must be >= 1");
    return -bernoulli_number(n + 1) / Rational(static_cast<long>(n + 1));
}

std::complex<double> polylog(unsigned long m, std::complex<double> z, double tol)
{
    if (m == 0)
        throw InvalidInput("polylog order must be >= 1");
    if (tol <= 0)
        throw InvalidInput("tolerance must be positive");
    double az = std::abs(z);
    constexpr double kBoundaryEps = 1e-12;
    bool on_circle = std::abs(az - 1.0) <= kBoundaryEps;
    if (az > 1.0 + kBoundaryEps || (on_circle && m < 2))
        throw InvalidInput("series diverges: need |z| < 1, or |z| = 1 with m >= 2");

    std::complex<double> sum = 0.0;
    std::complex<double> zn = 1.0;
    for (unsigned long n = 1;; ++n) {
        zn *= z;
        sum += zn / std::pow(static_cast<double>(n), static_cast<double>(m));
        double bound;
        if (on_circle) {
            // sum_{k>n} k^-m <= n^(1-m)/(m-1)
            bound = std::pow(static_cast<double>(n), 1.0 - static_cast<double>(m)) /
                    (static_cast<double>(m) - 1.0);
        } else {
            bound = std::pow(az, static_cast<double>(n + 1)) /
                    (std::pow(static_cast<double>(n + 1), static_cast<double>(m)) * (1.0 - az));
        }
        if (bound < tol)
            return sum;
    }
}

std::complex<double> dirichlet_L(const DirichletCharacter& chi, double s, double tol)
{
    if (!(s > 0))
        throw InvalidInput("s must be positive");
    if (tol <= 0)
        throw InvalidInput("tolerance must be positive");
    if (chi.is_principal() && s <= 1)
        throw InvalidInput("pole: principal character needs s > 1");

    unsigned long m = chi.modulus();
    std::vector<std::complex<double>> val(m);
    unsigned long phi = 0;
    for (unsigned long r = 0; r < m; ++r) {
        val[r] = chi.value(static_cast<long>(r));
        if (chi.table()[r] >= 0)
            ++phi;
    }

    std::complex<double> sum = 0.0;
    std::complex<double> comp = 0.0; // Kahan correction
    auto add = [&](std::complex<double> t) {
        auto y = t - comp;
        auto u = sum + y;
        comp = (u - sum) - y;
        sum = u;
    };

    const double md = static_cast<double>(m);
    for (unsigned long k = 0;; ++k) {
        for (unsigned long r = 1; r <= m; ++r) {
            unsigned long n = k * m + r;
            const auto& c = val[r % m];
            if (c.real() == 0.0 && c.imag() == 0.0)
                continue;
            add(c / std::pow(static_cast<double>(n), s));
        }
        unsigned long K = k + 1; // blocks 0..k done, tail starts at block K
        double bound = std::numeric_limits<double>::infinity();
        if (!chi.is_principal()) {
            double Kd = static_cast<double>(K);
            bound = phi * std::pow(md, -s) *
                    (std::pow(Kd, -s) + s * std::pow(Kd, -s - 1.0));
        }
        if (s > 1) {
            double T = static_cast<double>(K) * md;
            bound = std::min(bound, std::pow(T, 1.0 - s) / (s - 1.0));
        }
        if (bound < tol)
            return sum;
    }
}

unsigned long class_number(long D)
{
    if (D >= 0)
        throw InvalidInput("discriminant must be negative");
    DirichletCharacter chi = kronecker_character(D); // validates D
    unsigned long w = D == -4 ? 4 : (D == -3 ? 6 : 2);
    double sqrt_d = std::sqrt(static_cast<double>(-D));
    double scale = static_cast<double>(w) * sqrt_d / (2.0 * std::numbers::pi);
    // target the class number to 1e-4, two orders under the 0.01 residual gate
    double tol_L = 1e-4 / scale;
    double L = dirichlet_L(chi, 1.0, tol_L).real();
    double h_real = scale * L;
    double h = std::round(h_real);
    if (std::abs(h_real - h) >= 0.01)
        throw PrecisionError("class number residual too large for D = " + std::to_string(D));
    if (h < 1)
        throw PrecisionError("nonpositive class number computed for D = " + std::to_string(D));
    return static_cast<unsigned long>(h);
}

double zeta_numeric(unsigned long k, double tol)
{
    if (k < 2)
        throw InvalidInput("zeta_numeric needs k >= 2");
    if (k % 2 == 0)
        return zeta_even(k).numeric();
    return polylog(k, 1.0, tol).real();
}

} // namespace ztk
