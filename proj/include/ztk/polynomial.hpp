#ifndef ZTK_POLYNOMIAL_HPP
#define ZTK_POLYNOMIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ztk/rational.hpp"

namespace ztk {

// Dense polynomial over Q; coefficient index = degree of the monomial.
// The zero polynomial is the empty coefficient vector, otherwise the
// trailing coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t degree) const;

    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& c) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    // Euclidean division a = q*b + r with deg r < deg b; b must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                    const Polynomial& b);

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

} // namespace ztk

#endif
