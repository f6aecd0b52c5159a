#include "mstack/strata.hpp"

#include <numeric>

#include "mstack/errors.hpp"

namespace mstack {

RationalFunction total_series_unfixed(int rank, int genus) {
    if (rank < 1) fail("InvalidRank", "total series needs rank >= 1");
    IntPolynomial num = IntPolynomial::constant(BigInt(1));
    IntPolynomial den = IntPolynomial::constant(BigInt(1));
    for (int k = 1; k <= rank; ++k) {
        num = num * IntPolynomial::one_plus_tk(static_cast<std::size_t>(2 * k - 1))
                        .pow(static_cast<unsigned long>(2 * genus));
        den = den * IntPolynomial::one_minus_tk(static_cast<std::size_t>(2 * k));
    }
    for (int k = 1; k <= rank - 1; ++k)
        den = den * IntPolynomial::one_minus_tk(static_cast<std::size_t>(2 * k));
    return RationalFunction(std::move(num), std::move(den));
}

StrataSeriesEngine::StrataSeriesEngine(int genus, long order) : genus_(genus), order_(order) {
    if (genus_ < 0) fail("InvalidRank", "genus must be nonnegative");
    if (order_ < 0) fail("InvalidRank", "order must be nonnegative");
}

const TruncatedSeries& StrataSeriesEngine::semistable(long rank, long degree) {
    const std::pair<long, long> key{rank, degree};
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    TruncatedSeries acc = total_series_unfixed(static_cast<int>(rank), genus_).expand(order_);
    // Only strata entering at t^{2 codim} <= t^order matter.
    const long max_codim = order_ / 2;
    for (const HNType& type : enumerate_types(rank, degree, genus_, max_codim)) {
        TruncatedSeries product = TruncatedSeries::one(order_);
        bool vanishes = false;
        for (const HNBlock& b : type.blocks()) {
            const TruncatedSeries& factor = semistable(b.rank, b.deg);
            if (factor.is_zero()) {
                vanishes = true;
                break;
            }
            product = product * factor;
        }
        if (vanishes) continue;
        const long c = codim(type, genus_);
        if (c < 0) fail("InvalidHNType", "stratum with semistable content has negative codimension");
        if (2 * c > order_) continue;
        // shift by t^{2c} and subtract
        std::vector<Rational> coeffs(static_cast<std::size_t>(order_) + 1, Rational(0));
        for (long k = 0; k + 2 * c <= order_; ++k)
            coeffs[static_cast<std::size_t>(k + 2 * c)] = product.coeff(static_cast<std::size_t>(k));
        acc = acc - TruncatedSeries(order_, std::move(coeffs));
    }
    return memo_.emplace(key, std::move(acc)).first->second;
}

TruncatedSeries ss_series(long rank, long degree, int genus, long order) {
    StrataSeriesEngine engine(genus, order);
    return engine.semistable(rank, degree);
}

TruncatedSeries coarse_moduli_series(long rank, long degree, int genus, long order) {
    if (std::gcd(rank, degree) != 1) fail("NotCoprime", "coarse series needs gcd(rank, degree) = 1");
    TruncatedSeries ss = ss_series(rank, degree, genus, order + 2);
    TruncatedSeries gerbe = TruncatedSeries::from_polynomial(IntPolynomial::one_minus_tk(2), order + 2);
    return (ss * gerbe).truncated(order);
}

TruncatedSeries fixed_det_coarse_series(long rank, long degree, int genus, long order) {
    if (std::gcd(rank, degree) != 1)
        fail("NotCoprime", "fixed-determinant coarse series needs gcd(rank, degree) = 1");
    if (genus < 1) fail("InvalidGenus", "fixed-determinant coarse series needs genus >= 1");
    const long work_order = order + 2;
    TruncatedSeries ss = ss_series(rank, degree, genus, work_order);
    RationalFunction conversion(IntPolynomial::one_minus_tk(2),
                                IntPolynomial::one_plus_tk(1).pow(static_cast<unsigned long>(2 * genus)));
    TruncatedSeries result = (ss * conversion.expand(work_order)).truncated(order);
    const long expected_degree = 2 * (rank * rank - 1) * (genus - 1);
    for (long k = expected_degree + 1; k <= order; ++k) {
        if (result.coeff(static_cast<std::size_t>(k)) != 0)
            fail("NonPolynomialResult", "nonzero coefficient at degree " + std::to_string(k) +
                                            " beyond expected degree " + std::to_string(expected_degree));
    }
    return result;
}

}  // namespace mstack
