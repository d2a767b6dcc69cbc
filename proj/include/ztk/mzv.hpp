#ifndef ZTK_MZV_HPP
#define ZTK_MZV_HPP

#include <complex>
#include <vector>

namespace ztk {

// Index of a (possibly twisted) multiple zeta value.  Exponents are the
// x_1..x_p of the nested sum; twists, when present, are root-of-unity
// exponents relative to mu_level.  Validity of the final entry (x_p >= 2
// untwisted, (x_p, eps_p) != (1, 1) twisted) is checked by the evaluators,
// which lets invalid indices exist long enough to be rejected.
struct MZVIndex {
    std::vector<unsigned long> exponents;
    std::vector<unsigned long> twists; // empty means untwisted
    unsigned long level = 1;

    static MZVIndex untwisted(std::vector<unsigned long> exponents);
    static MZVIndex twisted(std::vector<unsigned long> exponents,
                            std::vector<unsigned long> twists, unsigned long level);

    unsigned long weight() const;
    unsigned long depth() const { return exponents.size(); }
};

struct MZVResult {
    double value = 0.0;
    double error_bound = 0.0;
};

struct CyclotomicMZVResult {
    std::complex<double> value;
    double error_bound = 0.0;
};

// Nested sum over 0 < n_1 < ... < n_p <= M, computed in O(M p) by reusing
// prefix sums.  error_bound covers the discarded n_p > M tail; see the
// implementation note for the constant.
MZVResult mzv(const MZVIndex& index, unsigned long M);

// Same with terms twisted by eps_i^(n_i), eps_i = exp(2 pi i twists_i/level).
CyclotomicMZVResult cyclotomic_mzv(const MZVIndex& index, unsigned long M);

// Verifies zeta(a) zeta(b) = zeta(a,b) + zeta(b,a) + zeta(a+b) within tol.
bool stuffle_check(unsigned long a, unsigned long b, double tol);

// zeta(2) as the iterated integral over 0 < t_2 < t_1 < 1 of dt_1/t_1 *
// dt_2/(1-t_2), reduced to the one-dimensional integral of -log(1-t)/t.
double zeta2_via_iterated_integral(double tol);

} // namespace ztk

#endif
