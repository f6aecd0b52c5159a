#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mstack/errors.hpp"
#include "mstack/json_io.hpp"
#include "mstack/pointcount.hpp"
#include "mstack/strata.hpp"
#include "mstack/trace.hpp"
#include "mstack/verify.hpp"

using namespace mstack;

namespace {

struct Options {
    int rank = 2;
    long degree = 0;
    int genus = 0;
    long q = 2;
    long r = 0;
    long s = 1;
    long order = kDefaultOrder;
    std::string convention = "sign-fixed";
    std::string l_poly;
    long height = 40;
    long max_codim = 10;
    std::string format = "text";
    std::string kind = "moduli-fixed-det";
    bool closed_form = false;
    bool total = false;
    bool fixed_det = false;
    bool include_one_block = false;
    long brute_cutoff = -1;
    long demo_s = 2;
    std::string suite = "all";
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const Json& j, const std::string& text) {
    if (json_mode(o))
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

IntPolynomial parse_l_poly(const std::string& csv) {
    std::vector<BigInt> coeffs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) fail("BadFunctionalEquation", "empty coefficient in --l-poly");
        coeffs.emplace_back(item);
    }
    return IntPolynomial(std::move(coeffs));
}

CurveData build_curve(const Options& o) {
    if (!o.l_poly.empty()) return CurveData(o.genus, o.q, parse_l_poly(o.l_poly));
    if (o.genus == 0) return CurveData(0, o.q);
    return CurveData::default_weil(o.genus, o.q);
}

int run_poincare(const Options& o) {
    const Convention conv = convention_from_string(o.convention);
    RingPresetParams params;
    params.genus = o.genus;
    params.rank = o.rank;
    params.convention = conv;
    params.curve = build_curve(o);
    const GradedRingSpec spec = ring_preset(o.kind, params);
    const TruncatedSeries series = poincare_from_generators(spec, o.order);
    Json j{{"kind", o.kind}, {"convention", o.convention}, {"series", series_to_json(series)}};
    std::ostringstream text;
    text << "poincare series (" << o.kind << ", " << o.convention << ", order " << o.order
         << "):\n  " << series.to_string() << "\n";
    if (o.closed_form) {
        if (o.kind != "moduli-fixed-det")
            fail("InvalidPreset", "--closed-form applies to the moduli-fixed-det preset only");
        const RationalFunction cf = poincare_closed_form(o.genus, o.rank, conv);
        j["closed_form"] = rational_function_to_json(cf);
        j["closed_form_matches_generators"] = (cf.expand(o.order) == series);
        text << "closed form: " << cf.to_string() << "\n";
    }
    emit(o, j, text.str());
    return 0;
}

int run_trace(const Options& o) {
    const GradedRingSpec spec =
        moduli_fixed_det(o.genus, o.rank, convention_from_string(o.convention), build_curve(o));
    TraceResult result;
    try {
        result = formal_trace(spec, o.r, o.s);
    } catch (const DomainError& e) {
        if (e.code() == "Divergent" && json_mode(o)) {
            TraceResult divergent;
            divergent.convergent = false;
            std::cout << trace_result_to_json(divergent).dump(2) << "\n";
        }
        throw;
    }
    Json j = trace_result_to_json(result);
    std::ostringstream text;
    text << "tr(phi^" << o.r << " x psi^" << o.s << ") = " << rational_to_string(result.value)
         << "\n";
    for (const TraceFactor& f : result.factors)
        text << "  factor^(" << f.exponent << "): " << f.text << " = " << rational_to_string(f.value)
             << "\n";
    text << "majorant: " << rational_to_string(*result.majorant) << "\n";
    if (o.brute_cutoff >= 0) {
        const BruteTraceResult brute = brute_trace(spec, o.r, o.s, o.brute_cutoff);
        j["brute"] = Json{{"cutoff", o.brute_cutoff},
                          {"partial", rational_to_json(brute.partial)},
                          {"tail_bound", rational_to_json(brute.tail_bound)},
                          {"within_bound", abs(brute.partial - result.value) <= brute.tail_bound}};
        text << "brute (cutoff " << o.brute_cutoff << "): partial = " << rational_to_string(brute.partial)
             << ", tail bound = " << rational_to_string(brute.tail_bound) << "\n";
    }
    emit(o, j, text.str());
    return 0;
}

int run_ss(const Options& o) {
    std::ostringstream text;
    Json j;
    if (o.total) {
        const RationalFunction total = total_series_unfixed(o.rank, o.genus);
        j = Json{{"total_series", rational_function_to_json(total)},
                 {"series", series_to_json(total.expand(o.order))}};
        text << "total series (rank " << o.rank << ", genus " << o.genus << "): " << total.to_string()
             << "\n  " << total.expand(o.order).to_string() << "\n";
    } else {
        const TruncatedSeries ss = ss_series(o.rank, o.degree, o.genus, o.order);
        j = Json{{"rank", o.rank}, {"degree", o.degree}, {"genus", o.genus},
                 {"series", series_to_json(ss)}};
        text << "semistable series (rank " << o.rank << ", degree " << o.degree << ", genus "
             << o.genus << "):\n  " << ss.to_string() << "\n";
    }
    emit(o, j, text.str());
    return 0;
}

int run_coarse(const Options& o) {
    const TruncatedSeries series = o.fixed_det
                                       ? fixed_det_coarse_series(o.rank, o.degree, o.genus, o.order)
                                       : coarse_moduli_series(o.rank, o.degree, o.genus, o.order);
    Json j{{"rank", o.rank},
           {"degree", o.degree},
           {"genus", o.genus},
           {"fixed_det", o.fixed_det},
           {"series", series_to_json(series)}};
    std::ostringstream text;
    text << (o.fixed_det ? "fixed-determinant coarse series" : "coarse moduli series") << " (rank "
         << o.rank << ", degree " << o.degree << ", genus " << o.genus << "):\n  "
         << series.to_string() << "\n";
    emit(o, j, text.str());
    return 0;
}

int run_strata(const Options& o) {
    const std::vector<HNType> types =
        enumerate_types(o.rank, o.degree, o.genus, o.max_codim, o.include_one_block);
    Json j = strata_to_json(types, o.genus);
    std::ostringstream text;
    for (const HNType& t : types) {
        text << "blocks=[";
        for (std::size_t i = 0; i < t.blocks().size(); ++i) {
            if (i) text << ",";
            text << "(" << t.blocks()[i].rank << "," << t.blocks()[i].deg << ")";
        }
        text << "] codim=" << codim(t, o.genus) << " polygon=[";
        const auto verts = polygon_of(t).vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) text << ",";
            text << "(" << verts[i].x << "," << verts[i].y << ")";
        }
        text << "]\n";
    }
    text << types.size() << " strata with codim <= " << o.max_codim << "\n";
    emit(o, j, text.str());
    return 0;
}

int run_mass(const Options& o) {
    const MassResult mass = mass_sl(o.rank, GroundField(o.q), o.height);
    Json j = mass_result_to_json(mass);
    std::ostringstream text;
    text << "mass (rank " << o.rank << ", q = " << o.q << ", height <= " << o.height
         << "): partial = " << rational_to_string(mass.partial)
         << ", tail bound = " << rational_to_string(mass.tail_bound) << "\n";
    if (mass.closed_form) text << "closed form: " << rational_to_string(*mass.closed_form) << "\n";
    emit(o, j, text.str());
    return 0;
}

int run_demo(const Options& o) {
    const FixedPointReport report = fixed_point_demo(GroundField(o.q), o.demo_s);
    Json j = fixed_point_report_to_json(report);
    std::ostringstream text;
    text << "r | tr(phi^r x psi^" << o.demo_s << ") | naive mass 1/|SL_2(F_{q^s})|\n";
    for (const FixedPointRow& row : report.rows)
        text << row.r << " | " << rational_to_string(row.trace) << " | "
             << rational_to_string(report.naive_mass) << "\n";
    text << "trace varies with r: " << (report.trace_varies_with_r ? "yes" : "no")
         << "; the naive count cannot\n";
    emit(o, j, text.str());
    return 0;
}

int emit_checks(const Options& o, const std::vector<CheckResult>& checks) {
    Json j = Json::array();
    std::ostringstream text;
    for (const CheckResult& c : checks) {
        j.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        text << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) text << "  [" << c.detail << "]";
        text << "\n";
    }
    const bool ok = all_pass(checks);
    text << (ok ? "all checks passed\n" : "verification FAILED\n");
    emit(o, j, text.str());
    return ok ? 0 : 3;
}

int run_errata(const Options& o) {
    const AdjudicationReport adj = convention_adjudication();
    std::vector<CheckResult> checks = check_convention_adjudication();
    Json j;
    std::ostringstream text;
    text << "Recorded discrepancies between the printed presentation and the computation:\n\n";
    text << "1. Closed-form denominator sign. The printed series has (1+t^{2i}) factors;\n"
            "   polynomial generators of even degree force (1-t^{2i}). Evidence: over the\n"
            "   grid g=0..3, n=2..4 the generator expansion matches the sign-fixed form at\n"
            "   every point and the as-printed form at none.\n";
    const bool sign_evidence = all_pass(check_generator_consistency());
    text << "   -> " << (sign_evidence ? "confirmed" : "NOT CONFIRMED") << "\n\n";
    text << "2. Geometric Frobenius weight on b_k. As printed, b_1 would carry weight\n"
            "   q^{k-1} = q^0, so the b_1 trace factor would be a divergent geometric\n"
            "   series for every (r,s); the adopted weight q^k reproduces the convergence\n"
            "   region s > r and the rank-2 projective-line trace values.\n";
    const bool trace_evidence = all_pass(check_p1_trace_closed_form()) &&
                                all_pass(check_divergence_boundary());
    text << "   -> " << (trace_evidence ? "confirmed" : "NOT CONFIRMED") << "\n\n";
    text << "3. Exterior generator range. Degree-1 exterior classes at level i=1 are\n"
            "   incompatible with the vanishing first Chern class. Adjudication against\n"
            "   the recursion-derived fixed-determinant total series:\n";
    for (const AdjudicationCell& cell : adj.cells) {
        text << "   g=" << cell.genus << " n=" << cell.rank << ": ";
        const char* names[3] = {"as-printed", "sign-fixed", "sl-strict"};
        for (int c = 0; c < 3; ++c) text << names[c] << "=" << (cell.match[c] ? "match" : "differ") << " ";
        text << "\n";
    }
    text << "   surviving convention(s):";
    for (Convention c : adj.survivors) text << " " << to_string(c);
    text << "\n   genus-2 coarse-series corroboration: " << (adj.newstead_pass ? "pass" : "fail")
         << "\n\n";
    for (const CheckResult& c : checks)
        text << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.detail << "]\n";

    Json cells = Json::array();
    for (const AdjudicationCell& cell : adj.cells)
        cells.push_back(Json{{"genus", cell.genus},
                             {"rank", cell.rank},
                             {"as-printed", cell.match[0]},
                             {"sign-fixed", cell.match[1]},
                             {"sl-strict", cell.match[2]}});
    Json survivors = Json::array();
    for (Convention c : adj.survivors) survivors.push_back(to_string(c));
    Json jchecks = Json::array();
    for (const CheckResult& c : checks)
        jchecks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j = Json{{"cells", cells},
             {"survivors", survivors},
             {"newstead_pass", adj.newstead_pass},
             {"checks", jchecks}};
    const bool ok = all_pass(checks);
    if (!ok) text << "verification FAILED\n";
    emit(o, j, text.str());
    return ok ? 0 : 3;
}

int run_verify(const Options& o) {
    if (o.suite == "lefschetz") {
        const LefschetzReport report = verify_lefschetz(o.rank, GroundField(o.q), o.height);
        Json j = lefschetz_report_to_json(report);
        std::ostringstream text;
        text << "lefschetz (rank " << o.rank << ", q = " << o.q << "): lhs = "
             << rational_to_string(report.lhs) << ", mass partial = "
             << rational_to_string(report.rhs_partial)
             << ", tail bound = " << rational_to_string(report.tail_bound)
             << (report.exact ? " (closed form, exact)" : "") << " -> "
             << (report.pass ? "PASS" : "FAIL") << "\n";
        emit(o, j, text.str());
        return report.pass ? 0 : 3;
    }
    if (o.suite == "grassmann") {
        const FactorizationReport report = grassmann_factorization_check(
            o.genus, o.rank, convention_from_string(o.convention), o.order);
        Json j = factorization_report_to_json(report);
        std::ostringstream text;
        text << "factorization (g = " << o.genus << ", n = " << o.rank << ", " << o.convention
             << "): " << (report.holds ? "holds" : "fails");
        if (report.first_mismatch) text << " (first mismatch at degree " << *report.first_mismatch << ")";
        text << "\n";
        emit(o, j, text.str());
        return report.holds ? 0 : 3;
    }
    if (o.suite == "errata") return run_errata(o);
    std::vector<CheckResult> checks;
    auto append = [&checks](std::vector<CheckResult> more) {
        for (CheckResult& c : more) checks.push_back(std::move(c));
    };
    if (o.suite == "recursion") {
        append(check_recursion_identity());
        append(check_recursion_genus0());
        append(check_atiyah_genus1());
        append(check_newstead_genus2());
    } else if (o.suite == "consistency") {
        append(check_generator_consistency());
    } else if (o.suite == "trace-oracle") {
        append(check_divergence_boundary());
        append(check_trace_oracle());
    } else if (o.suite == "acceptance") {
        append(run_acceptance_criteria());
    } else if (o.suite == "all") {
        append(run_acceptance_criteria());
        append(check_recursion_identity());
    } else {
        fail("InvalidSuite", "unknown verify suite '" + o.suite + "'");
    }
    return emit_checks(o, checks);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mstack: exact Poincare series, Frobenius traces, and stratification data\n"
                 "for moduli stacks of vector bundles on curves over finite fields"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_curve_flags = [&o](CLI::App* cmd) {
        cmd->add_option("-g,--genus", o.genus, "curve genus");
        cmd->add_option("-q", o.q, "field size (prime power)");
        cmd->add_option("--l-poly", o.l_poly,
                        "zeta numerator coefficients c0,c1,... (default (1+q t^2)^g)");
    };

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare series of a ring preset");
    poincare->add_option("--kind", o.kind,
                         "preset: moduli-fixed-det|bgl|bgm|bsl|grassmannian|open-curve|picard-stack");
    poincare->add_option("-n,--rank", o.rank, "rank");
    poincare->add_option("-k,--order", o.order, "truncation order");
    poincare->add_option("--convention", o.convention, "as-printed|sign-fixed|sl-strict");
    poincare->add_flag("--closed-form", o.closed_form, "also emit the closed-form rational function");
    add_curve_flags(poincare);
    add_common(poincare);

    CLI::App* trace = app.add_subcommand("trace", "formal trace tr(phi^r x psi^s)");
    trace->add_option("-n,--rank", o.rank, "rank");
    trace->add_option("-r", o.r, "power of the bundle-pullback Frobenius");
    trace->add_option("-s", o.s, "power of the arithmetic Frobenius");
    trace->add_option("--convention", o.convention, "as-printed|sign-fixed|sl-strict");
    trace->add_option("--brute", o.brute_cutoff, "also run the enumeration oracle to this degree");
    add_curve_flags(trace);
    add_common(trace);

    CLI::App* ss = app.add_subcommand("ss", "semistable-locus series via the stratification");
    ss->add_option("-n,--rank", o.rank, "rank");
    ss->add_option("-d,--degree", o.degree, "degree");
    ss->add_option("-g,--genus", o.genus, "curve genus");
    ss->add_option("-k,--order", o.order, "truncation order");
    ss->add_flag("--total", o.total, "emit the full-stack (unfixed determinant) series instead");
    add_common(ss);

    CLI::App* coarse = app.add_subcommand("coarse", "coarse moduli series (coprime rank/degree)");
    coarse->add_option("-n,--rank", o.rank, "rank");
    coarse->add_option("-d,--degree", o.degree, "degree");
    coarse->add_option("-g,--genus", o.genus, "curve genus");
    coarse->add_option("-k,--order", o.order, "truncation order");
    coarse->add_flag("--fixed-det", o.fixed_det, "fixed-determinant coarse space");
    add_common(coarse);

    CLI::App* strata = app.add_subcommand("strata", "filtration types below a codimension bound");
    strata->add_option("-n,--rank", o.rank, "rank");
    strata->add_option("-d,--degree", o.degree, "degree");
    strata->add_option("-g,--genus", o.genus, "curve genus");
    strata->add_option("--max-codim", o.max_codim, "codimension bound");
    strata->add_flag("--include-one-block", o.include_one_block, "include the one-block type");
    add_common(strata);

    CLI::App* mass = app.add_subcommand("mass", "groupoid mass over splitting types on the line");
    mass->add_option("-n,--rank", o.rank, "rank");
    mass->add_option("-q", o.q, "field size (prime power)");
    mass->add_option("--height", o.height, "splitting height cutoff");
    add_common(mass);

    CLI::App* verify = app.add_subcommand("verify", "identity checks; exit 3 on failure");
    verify->add_option("suite", o.suite,
                       "all|acceptance|lefschetz|grassmann|recursion|consistency|trace-oracle|errata");
    verify->add_option("-n,--rank", o.rank, "rank (lefschetz/grassmann)");
    verify->add_option("-g,--genus", o.genus, "genus (grassmann)");
    verify->add_option("-q", o.q, "field size (lefschetz)");
    verify->add_option("--height", o.height, "mass height cutoff (lefschetz)");
    verify->add_option("-k,--order", o.order, "truncation order (grassmann)");
    verify->add_option("--convention", o.convention, "convention (grassmann)");
    add_common(verify);

    CLI::App* demo = app.add_subcommand("demo", "twisted traces vs the naive fixed-point mass");
    demo->add_option("-q", o.q, "field size (prime power)");
    demo->add_option("-s", o.demo_s, "power of the arithmetic Frobenius (>= 2)");
    add_common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(poincare)) return run_poincare(o);
        if (app.got_subcommand(trace)) return run_trace(o);
        if (app.got_subcommand(ss)) return run_ss(o);
        if (app.got_subcommand(coarse)) return run_coarse(o);
        if (app.got_subcommand(strata)) return run_strata(o);
        if (app.got_subcommand(mass)) return run_mass(o);
        if (app.got_subcommand(verify)) return run_verify(o);
        if (app.got_subcommand(demo)) return run_demo(o);
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 1;
}
