#ifndef ZTK_PADIC_HPP
#define ZTK_PADIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "ztk/characters.hpp"
#include "ztk/rational.hpp"

namespace ztk {

// p-adic number with tracked precision: value = p^valuation * unit with the
// unit reduced mod p^precision and coprime to p, i.e. the value is known
// modulo p^(valuation + precision).  A zero is a value only known to vanish
// modulo p^k; it carries k but no valuation or unit.
class PAdic {
public:
    static PAdic zero(unsigned long p, long known_mod_exponent);
    // value p^valuation * unit at `precision` significant digits
    PAdic(unsigned long p, long valuation, const Integer& unit, long precision);

    unsigned long prime() const { return p_; }
    bool is_zero() const { return !valuation_.has_value(); }
    // valuation of a zero is undefined
    long valuation() const;
    const Integer& unit() const;
    long precision() const;
    // exponent k with the value known mod p^k
    long known_exponent() const;

    // base-p digits of the unit, least significant first
    std::vector<unsigned long> digits() const;

    PAdic operator-() const;
    friend PAdic operator+(const PAdic& a, const PAdic& b);
    friend PAdic operator-(const PAdic& a, const PAdic& b);
    friend PAdic operator*(const PAdic& a, const PAdic& b);
    friend PAdic operator/(const PAdic& a, const PAdic& b);

    // same value mod p^k (both operands must be known that far)
    static bool congruent(const PAdic& a, const PAdic& b, long k);

    // forget digits beyond p^k
    PAdic truncated_to_known(long k) const;

    std::string to_string() const; // "...32 (mod 5^2)" style

private:
    unsigned long p_ = 5;
    std::optional<long> valuation_;
    Integer unit_ = 0;
    long precision_ = 1; // for zero: the known-vanishing exponent
};

// Canonical embedding of an exact rational into Q_p at `precision`
// significant digits (the embedding itself is exact; precision only sets
// how many digits are materialized).
PAdic padic_embed(const Rational& r, unsigned long p, long precision);
// Same, keeping digits up to p^known_mod_exponent.
PAdic padic_embed_abs(const Rational& r, unsigned long p, long known_mod_exponent);

// Teichmuller representative: the (p-1)-st root of unity congruent to c mod
// p, computed as the limit of c^(p^n).
PAdic teichmuller(const Integer& c, unsigned long p, long precision);

// Disk [alpha, N]_p inside Z_p: the residues congruent to alpha mod p^N.
struct PAdicInterval {
    unsigned long p = 2;
    Integer alpha;
    unsigned long N = 0;

    PAdicInterval(unsigned long p, const Integer& alpha, unsigned long N);
};

// mu_{B,m}([alpha, N]_p) = p^(N(m-1)) B_m(alpha / p^N), exactly.
Rational bernoulli_distribution(unsigned long m, const PAdicInterval& I);

// Checks the defining finite-additivity identity: the measure of I equals
// the sum over its p children one level deeper.
bool distribution_additivity_check(unsigned long m, const PAdicInterval& I);

// The interpolation datum -(1 - p^(m-1)) B_m/m as an exact p-adic value
// known mod p^known_mod_exponent.
PAdic zeta_interpolation_value(unsigned long p, unsigned long m, long known_mod_exponent);

// Kubota-Leopoldt zeta branch a at s, correct mod p^(N+1).  Valid branches
// are the even a in [0, p-3]; the a = 0 branch has a pole at s = 1.  An
// exact integer s that is itself an interpolation node (1-s even, positive,
// = a mod p-1, not divisible by p) is evaluated exactly at that node;
// otherwise the smallest admissible interpolation index is used.
PAdic padic_zeta(unsigned long p, unsigned long a, long s, long N);
PAdic padic_zeta(unsigned long p, unsigned long a, const PAdic& s, long N);

// Branches {0, 2, ..., p-3} of the p-adic zeta continuation.
std::vector<unsigned long> zeta_branches(unsigned long p);

// L_p(1-n, chi) = -(1 - chi omega^-n(p) p^(n-1)) B_{n, chi omega^-n}/n with
// the twisted character kept at modulus lcm(modulus, p), which absorbs the
// Euler factor.  Identically zero for odd chi.  The character order must
// divide p-1 so its values embed in Z_p.  Result is known mod p^(N+1).
PAdic padic_L(unsigned long p, const DirichletCharacter& chi, unsigned long n, long N);

// Teichmuller character omega mod p (order p-1), exponents relative to the
// smallest primitive root.
DirichletCharacter omega_character(unsigned long p);

// ...and the primitive root it is built on.
unsigned long smallest_primitive_root(unsigned long p);

} // namespace ztk

#endif
