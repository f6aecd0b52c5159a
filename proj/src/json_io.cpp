#include "mstack/json_io.hpp"

#include "mstack/errors.hpp"

namespace mstack {

Json rational_to_json(const Rational& x) {
    return Json::array({x.get_num().get_str(), x.get_den().get_str()});
}

Json series_to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (const Rational& c : s.coeffs()) coeffs.push_back(rational_to_json(c));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const Json& j) {
    const long order = j.at("order").get<long>();
    std::vector<Rational> coeffs;
    for (const Json& c : j.at("coeffs"))
        coeffs.push_back(make_rational(BigInt(c.at(0).get<std::string>()),
                                       BigInt(c.at(1).get<std::string>())));
    return TruncatedSeries(order, std::move(coeffs));
}

Json rational_function_to_json(const RationalFunction& f) {
    auto poly = [](const IntPolynomial& p) {
        Json out = Json::array();
        for (const BigInt& c : p.coeffs()) out.push_back(c.get_str());
        return out;
    };
    return Json{{"num", poly(f.num())}, {"den", poly(f.den())}};
}

RationalFunction rational_function_from_json(const Json& j) {
    auto poly = [](const Json& arr) {
        std::vector<BigInt> coeffs;
        for (const Json& c : arr) coeffs.emplace_back(c.get<std::string>());
        return IntPolynomial(std::move(coeffs));
    };
    return RationalFunction(poly(j.at("num")), poly(j.at("den")));
}

Json trace_result_to_json(const TraceResult& t) {
    Json factors = Json::array();
    for (const TraceFactor& f : t.factors)
        factors.push_back(Json{{"text", f.text}, {"exp", f.exponent}});
    return Json{{"convergent", t.convergent},
                {"value", t.convergent ? rational_to_json(t.value) : Json(nullptr)},
                {"factors", factors},
                {"majorant", t.majorant ? rational_to_json(*t.majorant) : Json(nullptr)}};
}

Json factorization_report_to_json(const FactorizationReport& r) {
    return Json{{"holds", r.holds},
                {"lhs", series_to_json(r.lhs)},
                {"rhs", series_to_json(r.rhs)},
                {"first_mismatch_degree", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)}};
}

Json hn_type_to_json(const HNType& t, int genus) {
    Json blocks = Json::array();
    for (const HNBlock& b : t.blocks()) blocks.push_back(Json::array({b.rank, b.deg}));
    Json polygon = Json::array();
    const HNPolygon poly = polygon_of(t);
    for (const LatticePoint& v : poly.vertices()) polygon.push_back(Json::array({v.x, v.y}));
    return Json{{"blocks", blocks}, {"codim", codim(t, genus)}, {"polygon", polygon}};
}

Json strata_to_json(const std::vector<HNType>& types, int genus) {
    Json out = Json::array();
    for (const HNType& t : types) out.push_back(hn_type_to_json(t, genus));
    return out;
}

Json lefschetz_report_to_json(const LefschetzReport& r) {
    return Json{{"lhs", rational_to_json(r.lhs)},
                {"rhs_partial", rational_to_json(r.rhs_partial)},
                {"tail_bound", rational_to_json(r.tail_bound)},
                {"exact", r.exact},
                {"pass", r.pass}};
}

Json mass_result_to_json(const MassResult& m) {
    return Json{{"partial", rational_to_json(m.partial)},
                {"tail_bound", rational_to_json(m.tail_bound)},
                {"closed_form", m.closed_form ? rational_to_json(*m.closed_form) : Json(nullptr)}};
}

Json fixed_point_report_to_json(const FixedPointReport& r) {
    Json rows = Json::array();
    for (const FixedPointRow& row : r.rows)
        rows.push_back(Json{{"r", row.r}, {"trace", rational_to_json(row.trace)}});
    return Json{{"q", r.q},
                {"s", r.s},
                {"naive_mass", rational_to_json(r.naive_mass)},
                {"rows", rows},
                {"trace_varies_with_r", r.trace_varies_with_r}};
}

}  // namespace mstack
