#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mstack/errors.hpp"
#include "mstack/trace.hpp"
#include "mstack/verify.hpp"
#include "mstack/weil.hpp"

using namespace mstack;

namespace {

Rational rat(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

}  // namespace

TEST_CASE("weil validation accepts honest L-polynomials") {
    const WeilNumberSet supersingular = weil_numbers(CurveData(1, 2, IntPolynomial({1, 0, 2})));
    const auto p = supersingular.power_sums(3);
    CHECK(p[0] == 2);
    CHECK(p[1] == 0);
    CHECK(p[2] == -4);

    const WeilNumberSet ordinary = weil_numbers(CurveData(1, 2, IntPolynomial({1, -2, 2})));
    CHECK(ordinary.power_sums(2)[1] == 2);
}

TEST_CASE("weil validation rejects wrong inputs") {
    // (1-t)(1-2t): functional equation holds but the roots are off the circle
    CHECK_THROWS_WITH_AS(weil_numbers(CurveData(1, 2, IntPolynomial({1, -3, 2}))),
                         doctest::Contains("NotWeil"), DomainError);
    CHECK_THROWS_WITH_AS(CurveData(1, 2, IntPolynomial({1, 0, 3})),
                         doctest::Contains("BadFunctionalEquation"), DomainError);
    CHECK_THROWS_WITH_AS(CurveData(1, 2, IntPolynomial({1, 1})),
                         doctest::Contains("BadFunctionalEquation"), DomainError);
    CHECK_THROWS_WITH_AS(CurveData(0, 6), doctest::Contains("NotWeil"), DomainError);
}

TEST_CASE("power sums satisfy the L-polynomial recurrence") {
    for (const IntPolynomial& l : {IntPolynomial({1, 0, 2}), IntPolynomial({1, -2, 2}),
                                   CurveData::default_weil(2, 3).l_poly}) {
        const int g = static_cast<int>(l.degree() / 2);
        const WeilNumberSet wns = weil_numbers(CurveData(g, l == IntPolynomial({1, -2, 2}) ||
                                                                 l == IntPolynomial({1, 0, 2})
                                                             ? 2
                                                             : 3,
                                                         l));
        const auto p = wns.power_sums(24);
        // sum_i a_i p_{m-i} = 0 for m >= 2g
        for (std::size_t m = static_cast<std::size_t>(2 * g); m + 1 < 24; ++m) {
            BigInt acc(0);
            for (long i = 0; i <= l.degree(); ++i)
                acc += l.coeff(static_cast<std::size_t>(i)) * p[m - static_cast<std::size_t>(i)];
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("repeated-root L-polynomials pass the squarefree validation") {
    CHECK_NOTHROW(weil_numbers(CurveData::default_weil(3, 2)));
    // e_k of the m-th powers stay integral
    const WeilNumberSet wns = weil_numbers(CurveData::default_weil(2, 2));
    const auto e = wns.elementary_of_powers(3);
    CHECK(e.size() == 5);
    CHECK(e[0] == 1);
}

TEST_CASE("formal trace on the projective line") {
    const GradedRingSpec spec = moduli_fixed_det(0, 2, Convention::SignFixed, CurveData(0, 2));
    const TraceResult t = formal_trace(spec, 0, 1);
    CHECK(t.value == rat(8, 3));
    CHECK(*t.majorant == rat(8, 3));  // no exterior part: majorant = value
    // product of base^exponent reproduces the value
    Rational prod(1);
    for (const TraceFactor& f : t.factors)
        prod *= (f.exponent == 1) ? f.value : Rational(1) / f.value;
    CHECK(prod == t.value);

    CHECK_THROWS_WITH_AS(formal_trace(spec, 1, 1), doctest::Contains("Divergent"), DomainError);
    CHECK_THROWS_WITH_AS(trace_majorant(spec, 2, 1), doctest::Contains("Divergent"), DomainError);
}

TEST_CASE("formal trace with exterior classes stays rational") {
    const CurveData curve(1, 2, IntPolynomial({1, 0, 2}));
    const GradedRingSpec spec = moduli_fixed_det(1, 2, Convention::SlStrict, curve);
    CHECK(formal_trace(spec, 0, 1).value == Rational(3));
    // majorant at (r,s)=(0,2): (1-2^-4)^-1 (1-2^-2)^-1 (1 + 2*2^-4)^2
    CHECK(trace_majorant(spec, 0, 2) == rat(16, 15) * rat(4, 3) * rat(81, 64));
    CHECK(abs(formal_trace(spec, 0, 2).value) <= trace_majorant(spec, 0, 2));
}

TEST_CASE("trace values are exact rationals across the grid") {
    for (int g : {0, 1}) {
        for (int n : {2, 3}) {
            for (long q : {2L, 3L}) {
                const CurveData curve =
                    g == 0 ? CurveData(0, q) : CurveData(1, q, IntPolynomial({1, 0, q}));
                const GradedRingSpec spec = moduli_fixed_det(g, n, Convention::SlStrict, curve);
                for (const auto& [r, s] : std::vector<std::pair<long, long>>{{0, 1}, {0, 2}, {1, 2}}) {
                    const TraceResult t = formal_trace(spec, r, s);
                    CHECK(abs(t.value) <= *t.majorant);
                }
            }
        }
    }
}

TEST_CASE("brute oracle basics") {
    const GradedRingSpec spec = moduli_fixed_det(0, 2, Convention::SignFixed, CurveData(0, 2));
    const BruteTraceResult unit = brute_trace(spec, 0, 1, 0);
    CHECK(unit.partial == Rational(1));

    const BruteTraceResult b = brute_trace(spec, 0, 1, 20);
    CHECK(abs(b.partial - rat(8, 3)) <= b.tail_bound);

    CHECK_THROWS_WITH_AS(brute_trace(spec, 1, 1, 10), doctest::Contains("Divergent"), DomainError);
}

TEST_CASE("brute oracle with exterior classes") {
    const CurveData curve(1, 2, IntPolynomial({1, 0, 2}));
    const GradedRingSpec spec = moduli_fixed_det(1, 2, Convention::SlStrict, curve);
    const BruteTraceResult b = brute_trace(spec, 0, 1, 30);
    CHECK(abs(b.partial - Rational(3)) <= b.tail_bound);
}

TEST_CASE("tail bound shrinks monotonically with the cutoff") {
    const CurveData curve(1, 2, IntPolynomial({1, -2, 2}));
    const GradedRingSpec spec = moduli_fixed_det(1, 2, Convention::SignFixed, curve);
    Rational prev(-1);
    for (long cutoff : {0L, 4L, 8L, 12L, 16L, 20L, 24L}) {
        const BruteTraceResult b = brute_trace(spec, 0, 1, cutoff);
        CHECK(b.tail_bound >= 0);
        if (prev >= 0) CHECK(b.tail_bound <= prev);
        prev = b.tail_bound;
    }
    CHECK(brute_trace(spec, 0, 1, 40).tail_bound < rat(1, 100));
}

TEST_CASE("oracle grid and divergence boundary") {
    CHECK(all_pass(check_trace_oracle()));
    CHECK(all_pass(check_divergence_boundary()));
}
