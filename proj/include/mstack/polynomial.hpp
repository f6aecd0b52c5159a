#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mstack/rational.hpp"

namespace mstack {

// Dense univariate polynomial over Z in the variable t, index == exponent.
// The zero polynomial is the empty coefficient list; otherwise the trailing
// coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, std::size_t k);  // c*t^k
    static IntPolynomial one_minus_tk(std::size_t k);               // 1 - t^k
    static IntPolynomial one_plus_tk(std::size_t k);                // 1 + t^k

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t k) const;  // 0 beyond the stored range
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    const BigInt& leading() const;
    // Lowest-index nonzero coefficient; polynomial must be nonzero.
    const BigInt& trailing_nonzero() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const BigInt& c) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    IntPolynomial pow(unsigned long e) const;
    IntPolynomial shifted(std::size_t k) const;  // multiply by t^k
    IntPolynomial derivative() const;

    BigInt content() const;                // gcd of coefficients, >= 0
    IntPolynomial primitive_part() const;  // divided by content, sign preserved

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// Full gcd over Z[t] (content included), sign-normalized to positive leading
// coefficient; gcd(0, 0) == 0. Primitive-PRS based.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

// Exact quotient a / b; throws NonExactDivision when b does not divide a.
IntPolynomial poly_divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Quotient and remainder of a by b over Q[t] (b nonzero).
struct RatPolyDivRem {
    std::vector<Rational> quotient;
    std::vector<Rational> remainder;
};
RatPolyDivRem poly_divmod_rational(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace mstack
