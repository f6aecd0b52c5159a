#include "mstack/trace.hpp"

#include <map>

#include "mstack/errors.hpp"
#include "mstack/weil.hpp"

namespace mstack {

namespace {

struct EvenFactor {
    std::string name;
    long q_exp;  // eigenvalue of phi^r x psi^s is q^{q_exp}
};

struct ExtLevel {
    int level;        // i, generator degree 2i-1
    long q_exp;       // u = q^{q_exp} per chosen slot
    unsigned long m;  // lambda exponent, = r + s
    int slots;        // 2g
};

struct TraceInput {
    long q = 0;
    std::vector<EvenFactor> evens;
    std::vector<ExtLevel> levels;
};

TraceInput collect(const GradedRingSpec& spec, long r, long s) {
    if (r < 0 || s < 0) fail("Divergent", "r and s must be nonnegative");
    if (s <= r) fail("Divergent", "requires s > r");
    if (!spec.curve) fail("MissingCurveData", "trace evaluation needs curve data for q");
    TraceInput in;
    in.q = spec.curve->q;
    std::map<int, int> level_counts;
    for (const GeneratorDescriptor& g : spec.generators) {
        const long e = g.phi.q_exp * r + g.psi.q_exp * s;
        if (!g.odd) {
            if (e >= 0) fail("Divergent", "even generator " + g.name + " has weight q^" +
                                              std::to_string(e));
            in.evens.push_back({g.name, e});
        } else {
            const long m = g.phi.lambda_exp * r + g.psi.lambda_exp * s;
            const int level = (g.degree + 1) / 2;
            auto [it, fresh] = level_counts.emplace(level, 0);
            if (fresh) in.levels.push_back({level, e, static_cast<unsigned long>(m), 0});
            ++it->second;
        }
    }
    for (ExtLevel& lv : in.levels) lv.slots = level_counts[lv.level];
    return in;
}

// Exact upper bound for |lambda|^{r+s} = q^{(r+s)/2}.
Rational lambda_power_bound(long q, unsigned long m) {
    if (m % 2 == 0) return Rational(int_pow(BigInt(q), m / 2));
    return Rational(ceil_sqrt(int_pow(BigInt(q), m)));
}

std::string q_power_text(long e) { return "q^" + std::to_string(e); }

}  // namespace

TraceResult formal_trace(const GradedRingSpec& spec, long r, long s) {
    TraceInput in = collect(spec, r, s);
    TraceResult result;
    result.value = 1;
    Rational majorant(1);
    for (const EvenFactor& f : in.evens) {
        const Rational eps = rat_pow(BigInt(in.q), f.q_exp);
        const Rational base = Rational(1) - eps;
        result.factors.push_back({f.name + ": 1 - " + q_power_text(f.q_exp), -1, base});
        result.value /= base;
        majorant /= base;
    }
    if (!in.levels.empty()) {
        WeilNumberSet wns = weil_numbers(*spec.curve);
        // e_k(lambda^m) is level-independent; only u = q^{-is} varies.
        std::map<unsigned long, std::vector<BigInt>> esym;
        for (const ExtLevel& lv : in.levels) {
            auto it = esym.find(lv.m);
            if (it == esym.end()) it = esym.emplace(lv.m, wns.elementary_of_powers(lv.m)).first;
            const std::vector<BigInt>& e = it->second;
            const Rational u = rat_pow(BigInt(in.q), lv.q_exp);
            Rational base(0);
            Rational upow(1);
            for (int k = 0; k <= lv.slots; ++k) {
                Rational term = Rational(e[static_cast<std::size_t>(k)]) * upow;
                base += (k % 2 == 0) ? term : -term;
                upow *= u;
            }
            result.factors.push_back({"a-level i=" + std::to_string(lv.level) + ": prod_j(1 - lambda_j^" +
                                          std::to_string(lv.m) + " " + q_power_text(lv.q_exp) + ")",
                                      +1, base});
            result.value *= base;
            const Rational lb = lambda_power_bound(in.q, lv.m);
            majorant *= rat_pow(Rational(1) + lb * u, lv.slots);
        }
    }
    result.majorant = majorant;
    return result;
}

Rational trace_majorant(const GradedRingSpec& spec, long r, long s) {
    return *formal_trace(spec, r, s).majorant;
}

namespace {

struct BruteClass {
    long degree;
    bool exterior;
    Rational eps;                  // even generators
    std::vector<Rational> true_w;  // exterior: signed weight per slot count k
    std::vector<Rational> abs_w;   // exterior: majorant weight per k
};

void enumerate(const std::vector<BruteClass>& classes, std::size_t idx, long budget,
               const Rational& t, const Rational& a, Rational& partial, Rational& abs_partial) {
    if (idx == classes.size()) {
        partial += t;
        abs_partial += a;
        return;
    }
    const BruteClass& c = classes[idx];
    if (!c.exterior) {
        Rational pt = t;
        Rational pa = a;
        for (long e = 0; e * c.degree <= budget; ++e) {
            enumerate(classes, idx + 1, budget - e * c.degree, pt, pa, partial, abs_partial);
            pt *= c.eps;
            pa *= c.eps;
        }
    } else {
        for (std::size_t k = 0; k < c.true_w.size() && static_cast<long>(k) * c.degree <= budget; ++k) {
            enumerate(classes, idx + 1, budget - static_cast<long>(k) * c.degree, t * c.true_w[k],
                      a * c.abs_w[k], partial, abs_partial);
        }
    }
}

}  // namespace

BruteTraceResult brute_trace(const GradedRingSpec& spec, long r, long s, long degree_cutoff) {
    TraceInput in = collect(spec, r, s);
    std::vector<BruteClass> classes;
    Rational total_majorant(1);
    for (const EvenFactor& f : in.evens) {
        BruteClass c;
        // even generator of degree d contributes eps^e at degree d*e, sign +
        const GeneratorDescriptor* g = spec.find(f.name);
        c.degree = g->degree;
        c.exterior = false;
        c.eps = rat_pow(BigInt(in.q), f.q_exp);
        total_majorant /= Rational(1) - c.eps;
        classes.push_back(std::move(c));
    }
    if (!in.levels.empty()) {
        WeilNumberSet wns = weil_numbers(*spec.curve);
        std::map<unsigned long, std::vector<BigInt>> esym;
        for (const ExtLevel& lv : in.levels) {
            auto it = esym.find(lv.m);
            if (it == esym.end()) it = esym.emplace(lv.m, wns.elementary_of_powers(lv.m)).first;
            const std::vector<BigInt>& e = it->second;
            const Rational u = rat_pow(BigInt(in.q), lv.q_exp);
            const Rational lb = lambda_power_bound(in.q, lv.m);
            BruteClass c;
            c.degree = 2 * lv.level - 1;
            c.exterior = true;
            Rational upow(1);
            for (int k = 0; k <= lv.slots; ++k) {
                Rational tw = Rational(e[static_cast<std::size_t>(k)]) * upow;
                if (k % 2 == 1) tw = -tw;
                c.true_w.push_back(tw);
                c.abs_w.push_back(Rational(binomial(static_cast<unsigned long>(lv.slots),
                                                    static_cast<unsigned long>(k))) *
                                  rat_pow(lb * u, k));
                upow *= u;
            }
            total_majorant *= rat_pow(Rational(1) + lb * u, lv.slots);
            classes.push_back(std::move(c));
        }
    }
    Rational partial(0), abs_partial(0);
    enumerate(classes, 0, degree_cutoff, Rational(1), Rational(1), partial, abs_partial);
    return {partial, total_majorant - abs_partial};
}

}  // namespace mstack
