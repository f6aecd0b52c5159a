#include "mstack/curve.hpp"

#include "mstack/errors.hpp"

namespace mstack {

namespace {

void validate(const CurveData& c) {
    if (c.genus < 0) fail("BadFunctionalEquation", "negative genus");
    if (!is_prime_power(c.q)) fail("NotWeil", "q = " + std::to_string(c.q) + " is not a prime power");
    if (c.l_poly.degree() != 2L * c.genus)
        fail("BadFunctionalEquation", "L-polynomial degree " + std::to_string(c.l_poly.degree()) +
                                          " != 2g = " + std::to_string(2 * c.genus));
    if (c.l_poly.coeff(0) != 1) fail("BadFunctionalEquation", "L(0) != 1");
    // a_{2g-i} = q^{g-i} a_i, checked for i = 0..g (the rest is the same
    // relation read backwards).
    const BigInt q(c.q);
    for (int i = 0; i <= c.genus; ++i) {
        BigInt lhs = c.l_poly.coeff(static_cast<std::size_t>(2 * c.genus - i));
        BigInt rhs = int_pow(q, static_cast<unsigned long>(c.genus - i)) *
                     c.l_poly.coeff(static_cast<std::size_t>(i));
        if (lhs != rhs)
            fail("BadFunctionalEquation",
                 "coefficient symmetry a_{2g-i} = q^{g-i} a_i fails at i = " + std::to_string(i));
    }
}

}  // namespace

CurveData::CurveData(int genus_, long q_, IntPolynomial l_poly_)
    : genus(genus_), q(q_), l_poly(std::move(l_poly_)) {
    validate(*this);
}

CurveData::CurveData(int genus_, long q_) : genus(genus_), q(q_), l_poly({1}) {
    if (genus_ != 0) fail("BadFunctionalEquation", "L-polynomial required for genus >= 1");
    validate(*this);
}

CurveData CurveData::default_weil(int genus, long q) {
    IntPolynomial base({1, 0, q});
    return CurveData(genus, q, base.pow(static_cast<unsigned long>(genus)));
}

}  // namespace mstack
