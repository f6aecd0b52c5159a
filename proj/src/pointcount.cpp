#include "mstack/pointcount.hpp"

#include <algorithm>

#include "mstack/curve.hpp"
#include "mstack/errors.hpp"
#include "mstack/ring.hpp"
#include "mstack/trace.hpp"

namespace mstack {

SplittingType::SplittingType(std::vector<long> exps) : exponents(std::move(exps)) {
    if (exponents.empty()) fail("InvalidSplitting", "splitting type needs rank >= 1");
    for (std::size_t i = 0; i + 1 < exponents.size(); ++i)
        if (exponents[i] < exponents[i + 1])
            fail("InvalidSplitting", "exponents must be weakly decreasing");
}

long SplittingType::degree() const {
    long d = 0;
    for (long a : exponents) d += a;
    return d;
}

GroundField::GroundField(long q_) : q(q_) {
    if (!is_prime_power(q)) fail("NotPrimePower", "q = " + std::to_string(q) + " is not a prime power");
}

namespace {

long ceil_div(long a, long b) {  // b > 0
    long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

void splittings_rec(int remaining, long sum_left, long hi, long lo, std::vector<long>& acc,
                    std::vector<SplittingType>& out) {
    if (remaining == 0) {
        if (sum_left == 0) out.push_back(SplittingType(acc));
        return;
    }
    for (long a = std::min(hi, sum_left - (remaining - 1) * lo); a >= lo; --a) {
        if (sum_left - a > static_cast<long>(remaining - 1) * a) break;  // can't stay weakly decreasing
        acc.push_back(a);
        splittings_rec(remaining - 1, sum_left - a, a, lo, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<SplittingType> enumerate_splittings(int rank, long degree, long height) {
    if (rank < 1) fail("InvalidSplitting", "rank must be >= 1");
    if (height < 0) fail("InvalidSplitting", "height must be >= 0");
    std::vector<SplittingType> out;
    // a_1 runs from ceil(degree/rank) (it must reach the average) up to the
    // point where the forced floor a_1 - height pushes the sum past `degree`.
    for (long a1 = ceil_div(degree, rank); rank * a1 <= degree + (rank - 1) * height; ++a1) {
        std::vector<long> acc{a1};
        splittings_rec(rank - 1, degree - a1, a1, a1 - height, acc, out);
    }
    std::sort(out.begin(), out.end(),
              [](const SplittingType& a, const SplittingType& b) { return a.exponents < b.exponents; });
    return out;
}

BigInt gl_order(int m, long q) {
    BigInt qm = int_pow(BigInt(q), static_cast<unsigned long>(m));
    BigInt out(1);
    BigInt qk(1);
    for (int k = 0; k < m; ++k) {
        out *= qm - qk;
        qk *= q;
    }
    return out;
}

AutOrders aut_orders(const SplittingType& split, const GroundField& field) {
    // distinct exponents with multiplicities, descending
    std::vector<std::pair<long, int>> groups;
    for (long a : split.exponents) {
        if (!groups.empty() && groups.back().first == a)
            ++groups.back().second;
        else
            groups.emplace_back(a, 1);
    }
    BigInt aut(1);
    for (const auto& [e, m] : groups) aut *= gl_order(m, field.q);
    // Hom(O(a_j), O(a_i)) for a_i > a_j has dimension a_i - a_j + 1
    long u = 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j)
            u += static_cast<long>(groups[i].second) * groups[j].second *
                 (groups[i].first - groups[j].first + 1);
    aut *= int_pow(BigInt(field.q), static_cast<unsigned long>(u));
    // det is onto F_q^* for split bundles (block scalars), so the kernel has
    // index exactly q-1
    BigInt aut0 = aut / BigInt(field.q - 1);
    return {aut, aut0};
}

MassResult mass_sl(int rank, const GroundField& field, long height) {
    if (rank < 2) fail("InvalidRank", "mass needs rank >= 2");
    Rational partial(0);
    for (const SplittingType& split : enumerate_splittings(rank, 0, height))
        partial += make_rational(BigInt(1), aut_orders(split, field).aut0);

    // Tail over heights h > height: at most (h+1)^{rank-2} splittings of
    // height h, each term at most q^{-(h+1)} (q-1)^{-(rank-1)}. The term
    // ratio is at most rho below, so a geometric bound closes the sum.
    const Rational x = make_rational(BigInt(1), BigInt(field.q));
    const Rational rho =
        rat_pow(make_rational(BigInt(height + 3), BigInt(height + 2)), rank - 2) * x;
    if (rho >= 1) fail("TailBoundFailure", "geometric ratio bound >= 1; increase the height cutoff");
    const Rational first_term =
        rat_pow(Rational(BigInt(height + 2)), rank - 2) * rat_pow(x, height + 2) *
        rat_pow(make_rational(BigInt(1), BigInt(field.q - 1)), rank - 1);
    Rational tail = first_term / (Rational(1) - rho);

    MassResult result{partial, tail, std::nullopt};
    if (rank == 2) {
        result.closed_form =
            make_rational(BigInt(1), BigInt(field.q - 1) * (BigInt(field.q) * field.q - 1));
    }
    return result;
}

LefschetzReport verify_lefschetz(int rank, const GroundField& field, long height) {
    if (rank < 2) fail("InvalidRank", "Lefschetz check needs rank >= 2");
    GradedRingSpec spec = moduli_fixed_det(0, rank, Convention::SignFixed, CurveData(0, field.q));
    const Rational trace = formal_trace(spec, 0, 1).value;
    const Rational lhs = rat_pow(BigInt(field.q), 1 - static_cast<long>(rank) * rank) * trace;
    MassResult mass = mass_sl(rank, field, height);
    LefschetzReport report{lhs, mass.partial, mass.tail_bound, mass.closed_form.has_value(), false};
    if (mass.closed_form) {
        report.pass = (lhs == *mass.closed_form);
    } else {
        report.pass = abs(lhs - mass.partial) <= mass.tail_bound;
    }
    return report;
}

FixedPointReport fixed_point_demo(const GroundField& field, long s) {
    if (s < 2) fail("InvalidParameter", "demo needs s >= 2 so that r = 0 and r = 1 both converge");
    FixedPointReport report;
    report.q = field.q;
    report.s = s;
    const BigInt qs = int_pow(BigInt(field.q), static_cast<unsigned long>(s));
    report.naive_mass = make_rational(BigInt(1), qs * (qs * qs - 1));  // 1/|SL_2(F_{q^s})|
    GradedRingSpec spec = moduli_fixed_det(0, 2, Convention::SignFixed, CurveData(0, field.q));
    for (long r = 0; r < s; ++r) report.rows.push_back({r, formal_trace(spec, r, s).value});
    report.trace_varies_with_r = true;
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i)
        if (report.rows[i].trace == report.rows[i + 1].trace) report.trace_varies_with_r = false;
    return report;
}

}  // namespace mstack
