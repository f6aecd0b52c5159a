#pragma once

#include <optional>
#include <vector>

#include "mstack/rational.hpp"

namespace mstack {

// A bundle on the projective line as a sorted splitting vector
// O(a_1) + ... + O(a_n), a_1 >= ... >= a_n.
struct SplittingType {
    std::vector<long> exponents;

    explicit SplittingType(std::vector<long> exps);

    int rank() const { return static_cast<int>(exponents.size()); }
    long degree() const;
    long height() const { return exponents.front() - exponents.back(); }

    bool operator==(const SplittingType& o) const { return exponents == o.exponents; }
};

struct GroundField {
    long q;
    explicit GroundField(long q);
};

// All weakly decreasing integer n-tuples with the given sum and
// a_1 - a_n <= height, in deterministic order.
std::vector<SplittingType> enumerate_splittings(int rank, long degree, long height);

struct AutOrders {
    BigInt aut;   // |Aut(E)(F_q)|
    BigInt aut0;  // determinant-1 subgroup; always aut / (q-1) for split bundles
};

AutOrders aut_orders(const SplittingType& split, const GroundField& field);

BigInt gl_order(int m, long q);  // |GL_m(F_q)|

struct MassResult {
    Rational partial;
    Rational tail_bound;
    std::optional<Rational> closed_form;  // 1/((q-1)(q^2-1)) for rank 2
};

// Groupoid mass sum over degree-0 splittings: sum 1/|Aut0(E)|, cut at the
// given height, with a certified geometric tail bound on what was dropped.
MassResult mass_sl(int rank, const GroundField& field, long height);

struct LefschetzReport {
    Rational lhs;  // q^{1-n^2} * formal trace at (r,s) = (0,1)
    Rational rhs_partial;
    Rational tail_bound;
    bool exact;  // closed form available and matched exactly
    bool pass;
};

LefschetzReport verify_lefschetz(int rank, const GroundField& field, long height);

struct FixedPointRow {
    long r;
    Rational trace;
};

struct FixedPointReport {
    long q;
    long s;
    Rational naive_mass;  // 1/|SL_2(F_{q^s})|, independent of r
    std::vector<FixedPointRow> rows;
    bool trace_varies_with_r;
};

// Rank-2, genus-0 table of the twisted traces against the naive fixed-point
// count: the trace column moves with r while the naive mass cannot.
FixedPointReport fixed_point_demo(const GroundField& field, long s);

}  // namespace mstack
