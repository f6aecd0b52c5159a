#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mstack/errors.hpp"
#include "mstack/ring.hpp"
#include "mstack/verify.hpp"

using namespace mstack;

namespace {

std::vector<long> coeff_longs(const TruncatedSeries& s) {
    std::vector<long> out;
    for (const Rational& c : s.coeffs()) {
        REQUIRE(c.get_den() == 1);
        out.push_back(c.get_num().get_si());
    }
    return out;
}

}  // namespace

TEST_CASE("moduli preset at genus 0, rank 2") {
    const GradedRingSpec spec = moduli_fixed_det(0, 2, Convention::SignFixed, std::nullopt);
    REQUIRE(spec.generators.size() == 2);
    const GeneratorDescriptor* c2 = spec.find("c_2");
    const GeneratorDescriptor* b1 = spec.find("b_1");
    REQUIRE(c2 != nullptr);
    REQUIRE(b1 != nullptr);
    CHECK(c2->degree == 4);
    CHECK(b1->degree == 2);
    CHECK_FALSE(spec.has_exterior());
}

TEST_CASE("grassmannian preset") {
    const GradedRingSpec spec = grassmannian_ring(3);
    REQUIRE(spec.generators.size() == 2);
    CHECK(spec.generators[0].name == "b_1");
    CHECK(spec.generators[0].degree == 2);
    CHECK(spec.generators[1].name == "b_2");
    CHECK(spec.generators[1].degree == 4);
}

TEST_CASE("moduli preset at genus 1 under the strict convention") {
    const CurveData curve(1, 2, IntPolynomial({1, 0, 2}));
    const GradedRingSpec spec = moduli_fixed_det(1, 2, Convention::SlStrict, curve);
    REQUIRE(spec.generators.size() == 4);
    CHECK(spec.find("b_1") != nullptr);
    CHECK(spec.find("c_2") != nullptr);
    const GeneratorDescriptor* a1 = spec.find("a_2^(1)");
    const GeneratorDescriptor* a2 = spec.find("a_2^(2)");
    REQUIRE(a1 != nullptr);
    REQUIRE(a2 != nullptr);
    CHECK(a1->degree == 3);
    CHECK(a2->degree == 3);
    CHECK(a1->odd);
    // the printed range would add a_1^(j) of degree 1
    const GradedRingSpec printed = moduli_fixed_det(1, 2, Convention::SignFixed, curve);
    CHECK(printed.find("a_1^(1)") != nullptr);
    CHECK(printed.find("a_1^(1)")->degree == 1);
}

TEST_CASE("preset errors") {
    CHECK_THROWS_WITH_AS(moduli_fixed_det(0, 1, Convention::SignFixed, std::nullopt),
                         doctest::Contains("InvalidRank"), DomainError);
    CHECK_THROWS_WITH_AS(moduli_fixed_det(1, 2, Convention::SignFixed, std::nullopt),
                         doctest::Contains("MissingCurveData"), DomainError);
    RingPresetParams params;
    params.rank = 2;
    CHECK_THROWS_WITH_AS(ring_preset("no-such-preset", params), doctest::Contains("InvalidPreset"),
                         DomainError);
}

TEST_CASE("series from generators") {
    CHECK(coeff_longs(poincare_from_generators(
              moduli_fixed_det(0, 2, Convention::SignFixed, std::nullopt), 8)) ==
          std::vector<long>{1, 0, 1, 0, 2, 0, 2, 0, 3});

    RingPresetParams params;
    params.rank = 2;
    CHECK(coeff_longs(poincare_from_generators(ring_preset("bgl", params), 8)) ==
          std::vector<long>{1, 0, 1, 0, 2, 0, 2, 0, 3});

    // two odd degree-1 generators: (1+t)^2
    GradedRingSpec exterior_block;
    for (int j = 1; j <= 2; ++j) {
        GeneratorDescriptor g;
        g.name = "a_1^(" + std::to_string(j) + ")";
        g.degree = 1;
        g.odd = true;
        exterior_block.generators.push_back(g);
    }
    CHECK(coeff_longs(poincare_from_generators(exterior_block, 2)) == std::vector<long>{1, 2, 1});
}

TEST_CASE("closed forms") {
    const RationalFunction strict02 = poincare_closed_form(0, 2, Convention::SlStrict);
    CHECK(strict02 == RationalFunction(IntPolynomial({1}), IntPolynomial::one_minus_tk(2) *
                                                               IntPolynomial::one_minus_tk(4)));

    CHECK(coeff_longs(poincare_closed_form(1, 2, Convention::SlStrict).expand(6)) ==
          std::vector<long>{1, 0, 1, 2, 2, 2, 3});

    // the printed variant differs from the sign-fixed one at degree 4
    const TruncatedSeries printed = poincare_closed_form(0, 2, Convention::AsPrinted).expand(8);
    const TruncatedSeries fixed = poincare_closed_form(0, 2, Convention::SignFixed).expand(8);
    CHECK(printed.first_mismatch(fixed) == 4);
}

TEST_CASE("generator expansion adjudicates the closed-form sign") {
    CHECK(all_pass(check_generator_consistency()));
}

TEST_CASE("strict closed form matches strict generators") {
    for (int g = 0; g <= 2; ++g) {
        for (int n = 2; n <= 3; ++n) {
            std::optional<CurveData> curve;
            if (g > 0) curve = CurveData::default_weil(g, 2);
            CHECK(poincare_closed_form(g, n, Convention::SlStrict).expand(kDefaultOrder) ==
                  poincare_from_generators(moduli_fixed_det(g, n, Convention::SlStrict, curve),
                                           kDefaultOrder));
        }
    }
}

TEST_CASE("series coefficients are nonnegative integers") {
    for (int g = 0; g <= 3; ++g) {
        for (int n = 2; n <= 4; ++n) {
            std::optional<CurveData> curve;
            if (g > 0) curve = CurveData::default_weil(g, 2);
            const TruncatedSeries s =
                poincare_from_generators(moduli_fixed_det(g, n, Convention::SignFixed, curve), 30);
            for (const Rational& c : s.coeffs()) {
                CHECK(c.get_den() == 1);
                CHECK(c >= 0);
            }
        }
    }
}

TEST_CASE("factorization through the restriction sequence") {
    for (int g = 0; g <= 3; ++g)
        for (int n = 2; n <= 4; ++n)
            CHECK(grassmann_factorization_check(g, n, Convention::SlStrict, kDefaultOrder).holds);

    const FactorizationReport with_c1 =
        grassmann_factorization_check(0, 2, Convention::SignFixed, kDefaultOrder);
    CHECK_FALSE(with_c1.holds);
    CHECK(with_c1.first_mismatch == 2);
    // off by exactly one geometric factor
    const RationalFunction geom(IntPolynomial({1}), IntPolynomial::one_minus_tk(2));
    CHECK(with_c1.lhs * geom.expand(kDefaultOrder) == with_c1.rhs);

    CHECK(all_pass(check_grassmann_factorization()));
}

TEST_CASE("eigenvalue table") {
    const CurveData curve(1, 2, IntPolynomial({1, 0, 2}));
    const GradedRingSpec spec = moduli_fixed_det(1, 4, Convention::SignFixed, curve);

    const auto [c3_phi, c3_psi] = generator_eigenvalues(spec, "c_3");
    CHECK(c3_phi.is_identity());
    CHECK(c3_psi.q_exp == -3);
    CHECK(c3_psi.lambda_kind == EigenMonomial::Lambda::None);

    const auto [b2_phi, b2_psi] = generator_eigenvalues(spec, "b_2");
    CHECK(b2_phi.q_exp == 1);
    CHECK(b2_psi.q_exp == -2);

    const auto [a_phi, a_psi] = generator_eigenvalues(spec, "a_2^(1)");
    CHECK(a_phi.lambda_kind == EigenMonomial::Lambda::Single);
    CHECK(a_phi.lambda_index == 1);
    CHECK(a_phi.lambda_exp == 1);
    CHECK(a_phi.q_exp == 0);
    CHECK(a_psi.lambda_exp == 1);
    CHECK(a_psi.q_exp == -2);

    CHECK_THROWS_WITH_AS(generator_eigenvalues(spec, "c_99"), doctest::Contains("UnknownGenerator"),
                         DomainError);
}

TEST_CASE("arithmetic Frobenius inverts the geometric one on every generator") {
    const CurveData curve(2, 3, CurveData::default_weil(2, 3).l_poly);
    for (Convention conv : {Convention::AsPrinted, Convention::SignFixed, Convention::SlStrict}) {
        const GradedRingSpec spec = moduli_fixed_det(2, 3, conv, curve);
        for (const GeneratorDescriptor& g : spec.generators)
            CHECK((g.psi * g.geometric()).is_identity());
    }
}

TEST_CASE("convention strings round-trip") {
    for (Convention c : {Convention::AsPrinted, Convention::SignFixed, Convention::SlStrict})
        CHECK(convention_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(convention_from_string("bogus"), DomainError);
}
