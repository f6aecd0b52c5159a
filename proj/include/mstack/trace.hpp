#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mstack/rational.hpp"
#include "mstack/ring.hpp"

namespace mstack {

struct TraceFactor {
    std::string text;
    int exponent;    // -1 for geometric-series factors, +1 for exterior blocks
    Rational value;  // exact value of the base
};

struct TraceResult {
    bool convergent = true;
    Rational value;
    std::vector<TraceFactor> factors;
    std::optional<Rational> majorant;
};

// Alternating trace of phi^r x psi^s over the free graded algebra:
//   prod over even generators (1 - eigen)^{-1}
//   prod over exterior levels of the signed symmetric lambda-product.
// Throws Divergent unless s > r (the convergence boundary).
TraceResult formal_trace(const GradedRingSpec& spec, long r, long s);

// Absolute-convergence majorant: (1-|eigen|)^{-1} per even generator and
// (1 + L q^{-is})^{2g} per exterior level, where L is q^{(r+s)/2} when r+s is
// even and the integer ceiling of it otherwise. Always >= |trace value|.
Rational trace_majorant(const GradedRingSpec& spec, long r, long s);

struct BruteTraceResult {
    Rational partial;
    Rational tail_bound;
};

// Independent oracle: sums (-1)^degree * eigenvalue over all monomials of
// total degree <= degree_cutoff (even generators with unbounded exponent,
// exterior slots 0/1, aggregated per level through elementary symmetric
// functions so every partial sum stays rational). tail_bound is the majorant
// mass of the omitted degrees, so |partial - formal value| <= tail_bound.
BruteTraceResult brute_trace(const GradedRingSpec& spec, long r, long s, long degree_cutoff);

}  // namespace mstack
