#ifndef ZTK_ZETAVALUES_HPP
#define ZTK_ZETAVALUES_HPP

#include <complex>
#include <string>

#include "ztk/characters.hpp"
#include "ztk/rational.hpp"

namespace ztk {

// Exact multiple of a power of pi: coefficient * pi^pi_exponent.
struct PiPower {
    Rational coefficient;
    unsigned pi_exponent = 0;

    double numeric() const;
    std::string to_string() const; // "1/6 * pi^2"
    friend bool operator==(const PiPower& a, const PiPower& b) = default;
};

// Euler's evaluation zeta(2m) = (-1)^(m-1) (2 pi)^(2m) B_2m / (2 (2m)!).
PiPower zeta_even(unsigned long two_m);

// zeta(-n) = -B_(n+1)/(n+1); zero at even n > 0.
Rational zeta_negative(unsigned long n);

// L_m(z) = sum z^n / n^m with a certified truncation bound; valid for
// |z| < 1, or |z| = 1 with m >= 2.
std::complex<double> polylog(unsigned long m, std::complex<double> z, double tol);

// Dirichlet L-series at real s > 0 summed in blocks of one full period, with
// a tail bound from the vanishing of full-period character sums (s <= 1
// needs a non-principal character).
std::complex<double> dirichlet_L(const DirichletCharacter& chi, double s, double tol);

// Class number of the imaginary quadratic field of fundamental discriminant
// D < 0 via h = w sqrt(|D|) L(1, chi_D) / (2 pi).
unsigned long class_number(long D);

// Numeric zeta(k) for integer k >= 2: exact pi-power for even k, polylog at
// z = 1 for odd k.
double zeta_numeric(unsigned long k, double tol);

} // namespace ztk

#endif
