#include "mstack/ring.hpp"

#include <algorithm>

#include "mstack/errors.hpp"

namespace mstack {

Convention convention_from_string(const std::string& s) {
    if (s == "as-printed") return Convention::AsPrinted;
    if (s == "sign-fixed") return Convention::SignFixed;
    if (s == "sl-strict") return Convention::SlStrict;
    fail("InvalidConvention", "unknown convention '" + s + "'");
}

std::string to_string(Convention c) {
    switch (c) {
        case Convention::AsPrinted: return "as-printed";
        case Convention::SignFixed: return "sign-fixed";
        case Convention::SlStrict: return "sl-strict";
    }
    return "?";
}

EigenMonomial EigenMonomial::operator*(const EigenMonomial& o) const {
    EigenMonomial out;
    out.q_exp = q_exp + o.q_exp;
    if (lambda_kind == Lambda::None) {
        out.lambda_kind = o.lambda_kind;
        out.lambda_index = o.lambda_index;
        out.lambda_exp = o.lambda_exp;
    } else if (o.lambda_kind == Lambda::None) {
        out.lambda_kind = lambda_kind;
        out.lambda_index = lambda_index;
        out.lambda_exp = lambda_exp;
    } else if (lambda_kind == o.lambda_kind &&
               (lambda_kind == Lambda::All || lambda_index == o.lambda_index)) {
        out.lambda_kind = lambda_kind;
        out.lambda_index = lambda_index;
        out.lambda_exp = lambda_exp + o.lambda_exp;
        if (out.lambda_exp == 0) {
            out.lambda_kind = Lambda::None;
            out.lambda_index = 0;
        }
    } else {
        fail("InvalidEigenMonomial", "cannot multiply eigen-monomials with different lambda parts");
    }
    return out;
}

EigenMonomial EigenMonomial::inverse() const {
    EigenMonomial out = *this;
    out.q_exp = -q_exp;
    out.lambda_exp = -lambda_exp;
    return out;
}

bool EigenMonomial::is_identity() const {
    return q_exp == 0 && (lambda_kind == Lambda::None || lambda_exp == 0);
}

std::string EigenMonomial::to_string() const {
    std::string s;
    auto power = [](const std::string& base, long e) {
        if (e == 1) return base;
        return base + "^" + std::to_string(e);
    };
    if (lambda_kind == Lambda::Single && lambda_exp != 0)
        s = power("lambda_" + std::to_string(lambda_index), lambda_exp);
    else if (lambda_kind == Lambda::All && lambda_exp != 0)
        s = power("lambda", lambda_exp);
    if (q_exp != 0) {
        if (!s.empty()) s += "*";
        s += power("q", q_exp);
    }
    return s.empty() ? "1" : s;
}

const GeneratorDescriptor* GradedRingSpec::find(const std::string& name) const {
    for (const GeneratorDescriptor& g : generators)
        if (g.name == name) return &g;
    return nullptr;
}

bool GradedRingSpec::has_exterior() const {
    return std::any_of(generators.begin(), generators.end(),
                       [](const GeneratorDescriptor& g) { return g.odd; });
}

namespace {

GeneratorDescriptor make_c(int i) {
    GeneratorDescriptor g;
    g.name = "c_" + std::to_string(i);
    g.degree = 2 * i;
    g.odd = false;
    g.phi = EigenMonomial::identity();
    g.psi = EigenMonomial::q_power(-i);
    return g;
}

GeneratorDescriptor make_b(int k) {
    GeneratorDescriptor g;
    g.name = "b_" + std::to_string(k);
    g.degree = 2 * k;
    g.odd = false;
    g.phi = EigenMonomial::q_power(1);
    g.psi = EigenMonomial::q_power(-k);
    return g;
}

GeneratorDescriptor make_a(int i, int j) {
    GeneratorDescriptor g;
    g.name = "a_" + std::to_string(i) + "^(" + std::to_string(j) + ")";
    g.degree = 2 * i - 1;
    g.odd = true;
    g.phi = EigenMonomial::single_lambda(j, 1);
    g.psi = EigenMonomial::single_lambda(j, 1, -i);
    return g;
}

// Exterior generators exist at levels i = a_lo..n with 2g of them per level.
int exterior_low_index(Convention conv) { return conv == Convention::SlStrict ? 2 : 1; }

void append_exterior(GradedRingSpec& spec, int genus, int lo, int hi) {
    if (genus == 0) return;
    if (!spec.curve) fail("MissingCurveData", "exterior generators require curve data");
    if (spec.curve->genus != genus) fail("MissingCurveData", "curve genus does not match preset genus");
    for (int i = lo; i <= hi; ++i)
        for (int j = 1; j <= 2 * genus; ++j) spec.generators.push_back(make_a(i, j));
}

void require_rank(const std::string& kind, int n) {
    if (n < 2) fail("InvalidRank", kind + " preset needs rank >= 2, got " + std::to_string(n));
}

}  // namespace

GradedRingSpec moduli_fixed_det(int genus, int rank, Convention conv, std::optional<CurveData> curve) {
    require_rank("moduli-fixed-det", rank);
    GradedRingSpec spec;
    spec.convention = conv;
    spec.curve = std::move(curve);
    for (int i = 2; i <= rank; ++i) spec.generators.push_back(make_c(i));
    for (int k = 1; k <= rank - 1; ++k) spec.generators.push_back(make_b(k));
    append_exterior(spec, genus, exterior_low_index(conv), rank);
    return spec;
}

GradedRingSpec grassmannian_ring(int rank) {
    require_rank("grassmannian", rank);
    GradedRingSpec spec;
    for (int k = 1; k <= rank - 1; ++k) spec.generators.push_back(make_b(k));
    return spec;
}

GradedRingSpec open_curve_ring(int genus, int rank, Convention conv, std::optional<CurveData> curve) {
    require_rank("open-curve", rank);
    GradedRingSpec spec;
    spec.convention = conv;
    spec.curve = std::move(curve);
    const int lo = exterior_low_index(conv);
    for (int i = lo; i <= rank; ++i) spec.generators.push_back(make_c(i));
    append_exterior(spec, genus, lo, rank);
    return spec;
}

GradedRingSpec ring_preset(const std::string& kind, const RingPresetParams& p) {
    if (kind == "moduli-fixed-det") return moduli_fixed_det(p.genus, p.rank, p.convention, p.curve);
    if (kind == "grassmannian") return grassmannian_ring(p.rank);
    if (kind == "open-curve") return open_curve_ring(p.genus, p.rank, p.convention, p.curve);
    if (kind == "bgl") {
        if (p.rank < 1) fail("InvalidRank", "bgl needs rank >= 1");
        GradedRingSpec spec;
        spec.curve = p.curve;
        for (int i = 1; i <= p.rank; ++i) spec.generators.push_back(make_c(i));
        return spec;
    }
    if (kind == "bgm") {
        GradedRingSpec spec;
        spec.curve = p.curve;
        spec.generators.push_back(make_c(1));
        return spec;
    }
    if (kind == "bsl") {  // derived preset
        require_rank("bsl", p.rank);
        GradedRingSpec spec;
        spec.curve = p.curve;
        for (int i = 2; i <= p.rank; ++i) spec.generators.push_back(make_c(i));
        return spec;
    }
    if (kind == "picard-stack") {  // derived preset
        GradedRingSpec spec;
        spec.curve = p.curve;
        spec.generators.push_back(make_c(1));
        append_exterior(spec, p.genus, 1, 1);
        return spec;
    }
    fail("InvalidPreset", "unknown ring preset '" + kind + "'");
}

std::pair<EigenMonomial, EigenMonomial> generator_eigenvalues(const GradedRingSpec& spec,
                                                              const std::string& name) {
    const GeneratorDescriptor* g = spec.find(name);
    if (g == nullptr) fail("UnknownGenerator", "no generator named '" + name + "'");
    return {g->phi, g->psi};
}

TruncatedSeries poincare_from_generators(const GradedRingSpec& spec, long order) {
    TruncatedSeries acc = TruncatedSeries::one(order);
    for (const GeneratorDescriptor& g : spec.generators) {
        const auto d = static_cast<std::size_t>(g.degree);
        if (g.odd) {
            acc = acc * TruncatedSeries::from_polynomial(IntPolynomial::one_plus_tk(d), order);
        } else {
            RationalFunction geom(IntPolynomial::constant(BigInt(1)), IntPolynomial::one_minus_tk(d));
            acc = acc * geom.expand(order);
        }
    }
    return acc;
}

RationalFunction poincare_closed_form(int genus, int rank, Convention conv) {
    require_rank("poincare-closed-form", rank);
    IntPolynomial num = IntPolynomial::constant(BigInt(1));
    const int num_lo = (conv == Convention::SlStrict) ? 2 : 1;
    for (int i = num_lo; i <= rank; ++i)
        num = num * IntPolynomial::one_plus_tk(static_cast<std::size_t>(2 * i - 1))
                        .pow(static_cast<unsigned long>(2 * genus));
    IntPolynomial den = IntPolynomial::constant(BigInt(1));
    for (int i = 2; i <= rank; ++i) {
        den = den * (conv == Convention::AsPrinted
                         ? IntPolynomial::one_plus_tk(static_cast<std::size_t>(2 * i))
                         : IntPolynomial::one_minus_tk(static_cast<std::size_t>(2 * i)));
        den = den * IntPolynomial::one_minus_tk(static_cast<std::size_t>(2 * i - 2));
    }
    return RationalFunction(std::move(num), std::move(den));
}

FactorizationReport grassmann_factorization_check(int genus, int rank, Convention conv, long order) {
    TruncatedSeries lhs = poincare_closed_form(genus, rank, conv).expand(order);
    std::optional<CurveData> curve;
    if (genus > 0) curve = CurveData::default_weil(genus, 2);  // degrees only; eigenvalues unused
    TruncatedSeries rhs = poincare_from_generators(grassmannian_ring(rank), order) *
                          poincare_from_generators(open_curve_ring(genus, rank, conv, curve), order);
    FactorizationReport report{false, lhs, rhs, lhs.first_mismatch(rhs)};
    report.holds = !report.first_mismatch.has_value();
    return report;
}

}  // namespace mstack
