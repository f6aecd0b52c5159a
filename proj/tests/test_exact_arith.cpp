#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mstack/errors.hpp"
#include "mstack/rational_function.hpp"
#include "mstack/series.hpp"

using namespace mstack;

namespace {

TruncatedSeries geometric(long order) {
    return RationalFunction(IntPolynomial::constant(BigInt(1)), IntPolynomial::one_minus_tk(1))
        .expand(order);
}

std::vector<long> coeff_longs(const TruncatedSeries& s) {
    std::vector<long> out;
    for (const Rational& c : s.coeffs()) {
        REQUIRE(c.get_den() == 1);
        out.push_back(c.get_num().get_si());
    }
    return out;
}

std::mt19937_64 rng(2024);

IntPolynomial random_poly(int max_deg, int max_coeff, bool unit_constant = false) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long> coeff_dist(-max_coeff, max_coeff);
    const int deg = deg_dist(rng);
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = coeff_dist(rng);
    if (unit_constant) c[0] = 1;
    return IntPolynomial(std::move(c));
}

TruncatedSeries random_series(long order, int max_coeff) {
    std::uniform_int_distribution<long> num_dist(-max_coeff, max_coeff);
    std::uniform_int_distribution<long> den_dist(1, max_coeff);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = make_rational(BigInt(num_dist(rng)), BigInt(den_dist(rng)));
    return TruncatedSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("series multiplication basics") {
    const TruncatedSeries one_plus = TruncatedSeries::from_polynomial(IntPolynomial({1, 1}), 4);
    const TruncatedSeries one_minus = TruncatedSeries::from_polynomial(IntPolynomial({1, -1}), 4);
    CHECK(coeff_longs(one_plus * one_minus) == std::vector<long>{1, 0, -1, 0, 0});

    const TruncatedSeries f = random_series(6, 9);
    CHECK(series_multiply(f, TruncatedSeries::one(6)) == f);

    const TruncatedSeries geo = geometric(4);
    CHECK(coeff_longs(geo * geo) == std::vector<long>{1, 2, 3, 4, 5});
}

TEST_CASE("series arithmetic carries the minimum order") {
    const TruncatedSeries a = random_series(8, 5);
    const TruncatedSeries b = random_series(5, 5);
    CHECK((a * b).order() == 5);
    CHECK((a + b).order() == 5);
}

TEST_CASE("rational expansion") {
    CHECK(coeff_longs(geometric(5)) == std::vector<long>{1, 1, 1, 1, 1, 1});

    const RationalFunction f(IntPolynomial::constant(BigInt(1)),
                             IntPolynomial::one_minus_tk(2) * IntPolynomial::one_minus_tk(4));
    CHECK(coeff_longs(f.expand(8)) == std::vector<long>{1, 0, 1, 0, 2, 0, 2, 0, 3});

    CHECK_THROWS_WITH_AS(RationalFunction(IntPolynomial::constant(BigInt(1)),
                                          IntPolynomial::monomial(BigInt(1), 1))
                             .expand(3),
                         doctest::Contains("PoleAtZero"), DomainError);
}

TEST_CASE("expansion truncation consistency") {
    for (int trial = 0; trial < 20; ++trial) {
        const RationalFunction f(random_poly(6, 9), random_poly(6, 9, true));
        CHECK(f.expand(12).truncated(7) == f.expand(7));
    }
}

TEST_CASE("rational function normalization") {
    const RationalFunction f(IntPolynomial({2, 0, -2}), IntPolynomial({2, -2}));
    CHECK(f.num() == IntPolynomial({1, 1}));
    CHECK(f.den() == IntPolynomial({1}));

    const RationalFunction zero(IntPolynomial(), IntPolynomial({1, -1}));
    CHECK(zero.num().is_zero());
    CHECK(zero.den() == IntPolynomial({1}));

    CHECK(RationalFunction(IntPolynomial({1, 0, -1}), IntPolynomial({1, -1})) ==
          RationalFunction(IntPolynomial({1, 1}), IntPolynomial({1})));
}

TEST_CASE("normalization invariants on random inputs") {
    for (int trial = 0; trial < 40; ++trial) {
        IntPolynomial den = random_poly(5, 6);
        if (den.is_zero()) den = IntPolynomial({1});
        const RationalFunction f(random_poly(5, 6), den);
        // canonical form is idempotent
        const RationalFunction again(f.num(), f.den());
        CHECK(again == f);
        if (!f.num().is_zero()) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), f.num().content().get_mpz_t(), f.den().content().get_mpz_t());
            CHECK(g == 1);
            CHECK(poly_gcd(f.num(), f.den()).degree() == 0);
        }
        CHECK(f.den().trailing_nonzero() > 0);
    }
}

TEST_CASE("equality is an equivalence compatible with scaling") {
    for (int trial = 0; trial < 25; ++trial) {
        IntPolynomial den = random_poly(4, 5);
        if (den.is_zero()) den = IntPolynomial({1});
        const IntPolynomial num = random_poly(4, 5);
        IntPolynomial scale = random_poly(3, 4);
        if (scale.is_zero()) scale = IntPolynomial({1});
        const RationalFunction f(num, den);
        const RationalFunction g(num * scale, den * scale);
        CHECK(f == g);
    }
}

TEST_CASE("series ring axioms on random inputs") {
    for (int trial = 0; trial < 15; ++trial) {
        const TruncatedSeries a = random_series(10, 7);
        const TruncatedSeries b = random_series(10, 7);
        const TruncatedSeries c = random_series(10, 7);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("expansion is a ring homomorphism") {
    for (int trial = 0; trial < 15; ++trial) {
        const RationalFunction f(random_poly(5, 6), random_poly(5, 6, true));
        const RationalFunction g(random_poly(5, 6), random_poly(5, 6, true));
        CHECK(expand_rational(f * g, 14) ==
              series_multiply(expand_rational(f, 14), expand_rational(g, 14)));
    }
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_WITH_AS(RationalFunction(IntPolynomial({1}), IntPolynomial()),
                         doctest::Contains("ZeroDenominator"), DomainError);
}

TEST_CASE("polynomial gcd and exact division") {
    const IntPolynomial a = IntPolynomial({1, 1}).pow(3) * IntPolynomial({2, 0, 2});
    const IntPolynomial b = IntPolynomial({1, 1}) * IntPolynomial({4, 4});
    const IntPolynomial g = poly_gcd(a, b);
    CHECK(g == IntPolynomial({1, 1}) * IntPolynomial({1, 1}) * IntPolynomial({2}));
    CHECK(poly_divide_exact(a, g) * g == a);
    CHECK_THROWS_AS(poly_divide_exact(IntPolynomial({1, 0, 1}), IntPolynomial({1, 1})), DomainError);
}
