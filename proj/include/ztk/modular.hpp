#ifndef ZTK_MODULAR_HPP
#define ZTK_MODULAR_HPP

#include "ztk/rational.hpp"
#include "ztk/series.hpp"
#include "ztk/zetavalues.hpp"

namespace ztk {

// sum of d^k over divisors d of n
Integer divisor_sigma(unsigned long k, unsigned long n);

// Normalized Eisenstein series E_k = 1 - (4k/B_2k) sum sigma_(2k-1)(n) q^n.
// The index k follows the classical half-weight convention used here
// throughout: E_2 is the weight-4 series.
struct EisensteinSeries {
    unsigned long k = 2;
    TruncatedSeries series;
    unsigned long weight() const { return 2 * k; }
};

// Exact q-expansion through order M (coefficients of q^0 .. q^M).
EisensteinSeries eisenstein_series(unsigned long k, long M);

// The scalar 2*zeta(2k) with c_k = prefactor * E_k.
PiPower eisenstein_prefactor(unsigned long k);

// Normalized discriminant (E_2^3 - E_3^2)/1728 = q - 24q^2 + ...; integer
// coefficients, leading exponent 1 (a cusp form).
TruncatedSeries discriminant_series(long M);

// j = E_2^3 / discriminant = 1/q + 744 + 196884q + ...; Laurent series with
// leading exponent -1, computed through order M.
TruncatedSeries j_series(long M);

} // namespace ztk

#endif
