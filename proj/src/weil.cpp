#include "mstack/weil.hpp"

#include <cmath>
#include <complex>

#include "mstack/errors.hpp"

namespace mstack {

namespace {

// Roots of a squarefree integer polynomial via the Durand-Kerner iteration.
// Only used to certify |1/root|^2 == q; exact arithmetic never sees these.
std::vector<std::complex<double>> complex_roots(const IntPolynomial& p) {
    const long deg = p.degree();
    std::vector<std::complex<double>> a(static_cast<std::size_t>(deg) + 1);
    const double lead = p.leading().get_d();
    for (long i = 0; i <= deg; ++i) a[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> v(0.0, 0.0);
        for (long i = deg; i >= 0; --i) v = v * z + a[static_cast<std::size_t>(i)];
        return v;
    };
    std::vector<std::complex<double>> r(static_cast<std::size_t>(deg));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (auto& root : r) {
        w *= seed;
        root = w;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double move = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::complex<double> num = eval(r[i]);
            std::complex<double> den(1.0, 0.0);
            for (std::size_t j = 0; j < r.size(); ++j)
                if (j != i) den *= (r[i] - r[j]);
            std::complex<double> delta = num / den;
            r[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14) break;
    }
    return r;
}

void validate_weil(const CurveData& curve) {
    if (curve.genus == 0) return;
    // Squarefree part: repeated reciprocal roots (e.g. (1+qt^2)^g) would
    // spoil the root finder's accuracy, and multiplicity is irrelevant here.
    IntPolynomial sf = poly_divide_exact(curve.l_poly, poly_gcd(curve.l_poly, curve.l_poly.derivative()));
    const double q = static_cast<double>(curve.q);
    for (const std::complex<double>& root : complex_roots(sf)) {
        const double norm2 = std::norm(root);
        if (norm2 == 0.0) fail("NotWeil", "L-polynomial has a zero root");
        const double lambda_norm2 = 1.0 / norm2;  // |lambda|^2 for lambda = 1/root
        if (std::abs(lambda_norm2 - q) > 1e-6)
            fail("NotWeil", "reciprocal root with |lambda|^2 = " + std::to_string(lambda_norm2) +
                                " != q = " + std::to_string(curve.q));
    }
}

}  // namespace

WeilNumberSet::WeilNumberSet(CurveData curve) : curve_(std::move(curve)) { validate_weil(curve_); }

std::vector<BigInt> WeilNumberSet::power_sums(std::size_t count) const {
    const int twog = 2 * curve_.genus;
    // e_k = (-1)^k a_k from L(t) = prod (1 - lambda_j t).
    std::vector<BigInt> e(static_cast<std::size_t>(twog) + 1);
    for (int k = 0; k <= twog; ++k) {
        e[static_cast<std::size_t>(k)] = curve_.l_poly.coeff(static_cast<std::size_t>(k));
        if (k % 2 == 1) e[static_cast<std::size_t>(k)] = -e[static_cast<std::size_t>(k)];
    }
    std::vector<BigInt> p;
    p.reserve(count);
    for (std::size_t m = 0; m < count; ++m) {
        if (m == 0) {
            p.emplace_back(twog);
            continue;
        }
        // p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m,
        // with e_i = 0 beyond 2g.
        BigInt acc(0);
        const std::size_t top = std::min<std::size_t>(m - 1, static_cast<std::size_t>(twog));
        for (std::size_t i = 1; i <= top; ++i) {
            BigInt term = e[i] * p[m - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (m <= static_cast<std::size_t>(twog)) {
            BigInt term = e[m] * BigInt(static_cast<unsigned long>(m));
            acc += (m % 2 == 1) ? term : -term;
        }
        p.push_back(acc);
    }
    return p;
}

std::vector<BigInt> WeilNumberSet::elementary_of_powers(unsigned long m) const {
    const std::size_t n = static_cast<std::size_t>(2 * curve_.genus);
    std::vector<BigInt> ps = power_sums(n * m + 1);
    // Newton's identities run in exact rationals; the results are integers
    // because they are Galois-stable symmetric functions of algebraic integers.
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i) {
            Rational term = e[k - i] * Rational(ps[i * m]);
            acc += (i % 2 == 1) ? term : -term;
        }
        e[k] = acc / Rational(static_cast<unsigned long>(k));
    }
    std::vector<BigInt> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (e[k].get_den() != 1) fail("NotWeil", "non-integral symmetric function of Weil numbers");
        out[k] = e[k].get_num();
    }
    return out;
}

WeilNumberSet weil_numbers(const CurveData& curve) { return WeilNumberSet(curve); }

}  // namespace mstack
