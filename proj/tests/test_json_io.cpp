#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mstack/json_io.hpp"

using namespace mstack;

namespace {

std::mt19937_64 rng(7);

TruncatedSeries random_series(long order) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = make_rational(BigInt(num(rng)), BigInt(den(rng)));
    return TruncatedSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("series encoding shape and round trip") {
    const TruncatedSeries s = random_series(6);
    const Json j = series_to_json(s);
    CHECK(j.at("order") == 6);
    CHECK(j.at("coeffs").size() == 7);
    CHECK(j.at("coeffs").at(0).is_array());
    CHECK(j.at("coeffs").at(0).at(0).is_string());
    CHECK(series_from_json(j) == s);

    for (int trial = 0; trial < 10; ++trial) {
        const TruncatedSeries t = random_series(10);
        CHECK(series_from_json(series_to_json(t)) == t);
    }
}

TEST_CASE("rational function encoding round trip") {
    const RationalFunction f(IntPolynomial({2, 0, -2}), IntPolynomial({2, -2}));
    const Json j = rational_function_to_json(f);
    CHECK(j.at("num") == Json::array({"1", "1"}));
    CHECK(j.at("den") == Json::array({"1"}));
    CHECK(rational_function_from_json(j) == f);

    // big coefficients survive the string encoding
    const BigInt big = int_pow(BigInt(10), 40) + 7;
    const RationalFunction g(IntPolynomial({big}), IntPolynomial({1, 1}));
    CHECK(rational_function_from_json(rational_function_to_json(g)) == g);
}

TEST_CASE("trace and report payload shapes") {
    const GradedRingSpec spec = moduli_fixed_det(0, 2, Convention::SignFixed, CurveData(0, 2));
    const Json t = trace_result_to_json(formal_trace(spec, 0, 1));
    CHECK(t.at("convergent") == true);
    CHECK(t.at("value") == Json::array({"8", "3"}));
    CHECK(t.at("factors").size() == 2);
    CHECK(t.at("factors").at(0).contains("text"));
    CHECK(t.at("factors").at(0).at("exp") == -1);

    const Json f = factorization_report_to_json(
        grassmann_factorization_check(0, 2, Convention::SignFixed, 10));
    CHECK(f.at("holds") == false);
    CHECK(f.at("first_mismatch_degree") == 2);

    const Json strata = strata_to_json(enumerate_types(2, 0, 0, 3), 0);
    REQUIRE(strata.size() == 2);
    CHECK(strata.at(0).at("blocks") == Json::array({Json::array({1, 1}), Json::array({1, -1})}));
    CHECK(strata.at(0).at("codim") == 1);
    CHECK(strata.at(0).at("polygon") ==
          Json::array({Json::array({0, 0}), Json::array({1, 1}), Json::array({2, 0})}));

    const Json lef = lefschetz_report_to_json(verify_lefschetz(2, GroundField(2), 20));
    CHECK(lef.at("pass") == true);
    CHECK(lef.at("exact") == true);
    CHECK(lef.at("lhs") == Json::array({"1", "3"}));
}
