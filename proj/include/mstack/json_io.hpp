#pragma once

#include <json.hpp>

#include "mstack/hn.hpp"
#include "mstack/pointcount.hpp"
#include "mstack/rational_function.hpp"
#include "mstack/ring.hpp"
#include "mstack/series.hpp"
#include "mstack/trace.hpp"

namespace mstack {

using Json = nlohmann::ordered_json;

// {"order": K, "coeffs": [["num","den"], ...]}, integers as decimal strings
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

// {"num": ["..."], "den": ["..."]}, coefficient lists in decimal strings
Json rational_function_to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

Json rational_to_json(const Rational& x);  // ["num","den"]

Json trace_result_to_json(const TraceResult& t);
Json factorization_report_to_json(const FactorizationReport& r);
Json hn_type_to_json(const HNType& t, int genus);
Json strata_to_json(const std::vector<HNType>& types, int genus);
Json lefschetz_report_to_json(const LefschetzReport& r);
Json mass_result_to_json(const MassResult& m);
Json fixed_point_report_to_json(const FixedPointReport& r);

}  // namespace mstack
