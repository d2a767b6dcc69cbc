#ifndef ZTK_CHARACTERS_HPP
#define ZTK_CHARACTERS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "ztk/cyclotomic.hpp"
#include "ztk/rational.hpp"

namespace ztk {

// Dirichlet character mod m, stored as the full value table over residues.
// A value is either "zero" (at residues sharing a factor with m) or the
// exponent e in [0, order) of an abstract primitive order-th root of unity.
// The order is always minimal for the table.
class DirichletCharacter {
public:
    unsigned long modulus() const { return modulus_; }
    unsigned long order() const { return order_; }

    // exponent at a mod modulus, or nullopt where the character vanishes
    std::optional<unsigned long> exponent(const Integer& a) const;
    std::optional<unsigned long> exponent(long a) const { return exponent(Integer(a)); }

    bool is_principal() const { return order_ == 1; }
    // chi(-1) = -1
    bool is_odd() const;

    // value as a complex number, exp(2*pi*i*e/order); 0 where chi vanishes
    std::complex<double> value(long a) const;
    // value in Q(zeta_level); requires order | level
    CyclotomicNumber exact_value(const Integer& a, unsigned long level) const;

    const std::vector<long>& table() const { return values_; }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) = default;

private:
    friend DirichletCharacter make_character(unsigned long modulus, unsigned long order,
                                             const std::vector<long>& values);
    unsigned long modulus_ = 1;
    unsigned long order_ = 1;
    std::vector<long> values_; // exponent per residue, -1 where zero
};

// Validates a value table (zero set, chi(1)=1, full multiplicativity on
// units) and normalizes the order to the minimal one.  Entries of `values`
// are exponents relative to `order`, with -1 marking zero.
DirichletCharacter make_character(unsigned long modulus, unsigned long order,
                                  const std::vector<long>& values);

DirichletCharacter principal_character(unsigned long modulus = 1);

// Quadratic character of the field of discriminant D, as the Kronecker
// symbol (D/.) mod |D|; D must be a fundamental discriminant.
DirichletCharacter kronecker_character(long D);

bool is_fundamental_discriminant(long D);

// Pointwise product, defined mod lcm of the moduli.
DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b);
DirichletCharacter char_pow(const DirichletCharacter& a, unsigned long k);

// Smallest modulus the character is induced from; the character is
// primitive iff this equals its modulus.
unsigned long conductor(const DirichletCharacter& chi);

// Restriction of chi to its conductor.
DirichletCharacter primitive_part(const DirichletCharacter& chi);
// Extension of chi to a multiple of its modulus.
DirichletCharacter induced(const DirichletCharacter& chi, unsigned long new_modulus);

} // namespace ztk

#endif
