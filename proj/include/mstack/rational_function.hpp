#pragma once

#include <string>

#include "mstack/polynomial.hpp"
#include "mstack/series.hpp"

namespace mstack {

// Ratio of integer polynomials in canonical form:
//   * denominator nonzero, lowest nonzero denominator coefficient positive
//   * primitive-part gcd of numerator and denominator is 1
//   * content gcd of the pair is 1
//   * zero is 0/1
// Equality of rational functions is coefficient equality of canonical forms.
class RationalFunction {
public:
    RationalFunction();  // 0/1
    RationalFunction(IntPolynomial num, IntPolynomial den);

    static RationalFunction from_polynomial(IntPolynomial p);
    static RationalFunction one();

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator+(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;

    // Power-series expansion to the given order; PoleAtZero if den(0) == 0.
    TruncatedSeries expand(long order) const;

    std::string to_string() const;

private:
    IntPolynomial num_;
    IntPolynomial den_;
};

RationalFunction rational_normalize(IntPolynomial num, IntPolynomial den);
TruncatedSeries expand_rational(const RationalFunction& f, long order);

}  // namespace mstack
