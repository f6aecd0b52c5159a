#pragma once

#include "mstack/polynomial.hpp"

namespace mstack {

// A curve over F_q is carried around as (genus, q, L-polynomial), where the
// L-polynomial is the degree-2g numerator of the zeta function, L(0) = 1.
// Construction enforces the shape and the functional-equation symmetry
// a_{2g-i} = q^{g-i} a_i; the Weil condition |root|^-2 == q is checked
// numerically in weil_numbers().
struct CurveData {
    int genus;
    long q;
    IntPolynomial l_poly;

    CurveData(int genus, long q, IntPolynomial l_poly);
    CurveData(int genus, long q);  // genus 0 only; L = 1

    // L = (1 + q t^2)^g: a valid supersingular-type L-polynomial, used when a
    // computation needs eigenvalue data at genus g but no curve was supplied.
    static CurveData default_weil(int genus, long q);
};

}  // namespace mstack
