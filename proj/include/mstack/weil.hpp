#pragma once

#include <vector>

#include "mstack/curve.hpp"

namespace mstack {

// Exact engine for the reciprocal roots of an L-polynomial. Everything that
// feeds trace values goes through integer power sums (Newton's identities on
// the L-polynomial coefficients); floating point appears only in the one-time
// validation that every reciprocal root has |root|^2 == q.
class WeilNumberSet {
public:
    explicit WeilNumberSet(CurveData curve);

    const CurveData& curve() const { return curve_; }

    // p_m = sum_j lambda_j^m for m = 0..count-1 (p_0 = 2g).
    std::vector<BigInt> power_sums(std::size_t count) const;

    // e_k(lambda_1^m, ..., lambda_{2g}^m) for k = 0..2g. Integers: these are
    // the coefficients (up to sign) of prod_j (1 - lambda_j^m u).
    std::vector<BigInt> elementary_of_powers(unsigned long m) const;

private:
    CurveData curve_;
};

// Validates and wraps; throws BadFunctionalEquation / NotWeil.
WeilNumberSet weil_numbers(const CurveData& curve);

}  // namespace mstack
