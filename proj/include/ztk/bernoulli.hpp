#ifndef ZTK_BERNOULLI_HPP
#define ZTK_BERNOULLI_HPP

#include "ztk/characters.hpp"
#include "ztk/cyclotomic.hpp"
#include "ztk/polynomial.hpp"
#include "ztk/rational.hpp"

namespace ztk {

// Exact Bernoulli number B_m (B_1 = -1/2).  Computed by the integer-binomial
// recurrence sum_{j<=m} C(m+1,j) B_j = 0 behind a thread-safe memo table.
Rational bernoulli_number(unsigned long m);

// B_m(x); the constant term is B_m.
Polynomial bernoulli_polynomial(unsigned long m);

// Two sides of a congruence, reduced to [0, modulus).
struct CongruenceReport {
    Integer modulus;
    Integer lhs;
    Integer rhs;
    bool holds = false;
};

// Voronoi's congruence mod N for B_2m = P/Q in lowest terms:
//   (a^2m - 1) P == 2m a^(2m-1) Q sum_{s=1}^{N-1} s^(2m-1) floor(s a / N).
// a is reduced to [1, N-1]; requires N >= 2 and gcd(a, N) = 1.
CongruenceReport voronoi_check(const Integer& a, const Integer& N, unsigned long m);

// Kummer congruence mod p^(N+1):
//   (1 - p^(m-1)) B_m/m == (1 - p^(n-1)) B_n/n   for m == n mod (p-1)p^N,
// with p >= 3 prime, m and n even, p-1 and p dividing neither m nor n.
CongruenceReport kummer_check(unsigned long p, unsigned long m, unsigned long n,
                              unsigned long N);

// Generalized Bernoulli number B_{n,chi} = f^(n-1) sum_r chi(r) B_n(r/f)
// over the character's modulus f.  The value lives in Q(zeta_order).
CyclotomicNumber generalized_bernoulli(unsigned long n, const DirichletCharacter& chi);

// Residue of a rational mod M; the denominator must be invertible mod M.
Integer rational_mod(const Rational& r, const Integer& M);

} // namespace ztk

#endif
