#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mstack/errors.hpp"
#include "mstack/pointcount.hpp"
#include "mstack/verify.hpp"

using namespace mstack;

namespace {

Rational rat(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

std::vector<std::vector<long>> exps(const std::vector<SplittingType>& splits) {
    std::vector<std::vector<long>> out;
    for (const SplittingType& s : splits) out.push_back(s.exponents);
    return out;
}

}  // namespace

TEST_CASE("splitting enumeration") {
    CHECK(exps(enumerate_splittings(2, 0, 2)) == std::vector<std::vector<long>>{{0, 0}, {1, -1}});
    CHECK(exps(enumerate_splittings(2, 0, 4)) ==
          std::vector<std::vector<long>>{{0, 0}, {1, -1}, {2, -2}});
    CHECK(exps(enumerate_splittings(3, 0, 2)) ==
          std::vector<std::vector<long>>{{0, 0, 0}, {1, 0, -1}});
    // spread-3 tuples appear once the bound allows them
    CHECK(exps(enumerate_splittings(3, 0, 3)) ==
          std::vector<std::vector<long>>{{0, 0, 0}, {1, 0, -1}, {1, 1, -2}, {2, -1, -1}});
    CHECK(exps(enumerate_splittings(2, 1, 1)) == std::vector<std::vector<long>>{{1, 0}});
    CHECK_THROWS_AS(SplittingType({0, 1}), DomainError);
    for (const SplittingType& s : enumerate_splittings(4, 0, 6)) {
        CHECK(s.height() <= 6);
        CHECK(s.degree() == 0);
    }
}

TEST_CASE("field validation") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L, 16L}) CHECK_NOTHROW(GroundField{q});
    for (long q : {1L, 6L, 10L, 12L, 15L}) CHECK_THROWS_AS(GroundField{q}, DomainError);
}

TEST_CASE("automorphism group orders") {
    const GroundField f3(3);
    const AutOrders balanced = aut_orders(SplittingType({0, 0}), f3);
    CHECK(balanced.aut == 48);
    CHECK(balanced.aut0 == 24);

    const GroundField f2(2);
    const AutOrders split = aut_orders(SplittingType({1, -1}), f2);
    CHECK(split.aut == 8);
    CHECK(split.aut0 == 8);

    const AutOrders three = aut_orders(SplittingType({1, 1, -2}), f2);
    CHECK(three.aut == 1536);
    CHECK(three.aut0 == 1536);
}

TEST_CASE("automorphism order invariants") {
    const GroundField field(3);
    for (const SplittingType& s : enumerate_splittings(3, 0, 4)) {
        const AutOrders orders = aut_orders(s, field);
        CHECK(orders.aut0 * BigInt(field.q - 1) == orders.aut);
        // shifting every exponent leaves the group unchanged
        std::vector<long> shifted = s.exponents;
        for (long& a : shifted) a += 7;
        const AutOrders moved = aut_orders(SplittingType(shifted), field);
        CHECK(moved.aut == orders.aut);
    }
    CHECK(aut_orders(SplittingType({5, 5, 5}), field).aut == gl_order(3, 3));
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(1, 7) == 6);
}

TEST_CASE("rank-2 mass closed form") {
    const MassResult q2 = mass_sl(2, GroundField(2), 40);
    REQUIRE(q2.closed_form.has_value());
    CHECK(*q2.closed_form == rat(1, 3));
    CHECK(abs(*q2.closed_form - q2.partial) <= q2.tail_bound);

    const MassResult q3 = mass_sl(2, GroundField(3), 40);
    CHECK(*q3.closed_form == rat(1, 16));
    CHECK(abs(*q3.closed_form - q3.partial) <= q3.tail_bound);
}

TEST_CASE("mass partial sums increase with the height cutoff") {
    const GroundField field(2);
    Rational prev(-1);
    Rational prev_tail(2);
    for (long h : {0L, 4L, 8L, 12L, 16L, 20L}) {
        const MassResult m = mass_sl(3, field, h);
        CHECK(m.partial >= prev);
        CHECK(m.tail_bound <= prev_tail);
        prev = m.partial;
        prev_tail = m.tail_bound;
    }
}

TEST_CASE("rank-3 mass at height 40 is pinned to nine digits") {
    const MassResult m = mass_sl(3, GroundField(2), 40);
    CHECK(m.tail_bound < rat(1, 1000000000));
}

TEST_CASE("trace formula against the point count") {
    const LefschetzReport n2q2 = verify_lefschetz(2, GroundField(2), 40);
    CHECK(n2q2.exact);
    CHECK(n2q2.pass);
    CHECK(n2q2.lhs == rat(1, 3));

    const LefschetzReport n2q5 = verify_lefschetz(2, GroundField(5), 40);
    CHECK(n2q5.lhs == rat(1, 96));
    CHECK(n2q5.pass);

    const LefschetzReport n3q2 = verify_lefschetz(3, GroundField(2), 60);
    CHECK_FALSE(n3q2.exact);
    CHECK(n3q2.pass);
    CHECK(abs(n3q2.lhs - n3q2.rhs_partial) <= n3q2.tail_bound);
}

TEST_CASE("fixed-point table") {
    const FixedPointReport s2 = fixed_point_demo(GroundField(2), 2);
    CHECK(s2.naive_mass == rat(1, 60));
    REQUIRE(s2.rows.size() == 2);
    CHECK(s2.rows[0].trace == rat(64, 45));
    CHECK(s2.rows[1].trace == rat(32, 15));
    CHECK(s2.trace_varies_with_r);

    CHECK(fixed_point_demo(GroundField(2), 3).naive_mass == rat(1, 504));

    for (long q : {2L, 3L, 4L}) {
        const FixedPointReport r = fixed_point_demo(GroundField(q), 2);
        CHECK(r.rows[0].trace != r.rows[1].trace);
    }

    CHECK_THROWS_AS(fixed_point_demo(GroundField(2), 1), DomainError);
}

TEST_CASE("whole-grid acceptance checks") {
    CHECK(all_pass(check_lefschetz_rank2()));
    CHECK(all_pass(check_lefschetz_rank34()));
    CHECK(all_pass(check_fixed_point_mismatch()));
}
