#pragma once

// Text and JSON forms of the library's values.
//
//   Representation  "p=2,n=3,dims=5+3+1"  |  {"p":2,"n":3,"dims":[5,3,1]}
//   OrderTuple      "1,3", "_,1"          |  [1,3], [null,1]
//   LaurentPoly     [[exponent, "coefficient"], ...] by descending exponent
//   Rational        "num/den"
//   Degree          integer, or null for the zero polynomial

#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wmk/convergence.hpp"
#include "wmk/grothendieck.hpp"
#include "wmk/ramification.hpp"
#include "wmk/representation.hpp"
#include "wmk/series.hpp"

namespace wmk {

using Json = nlohmann::json;

std::vector<std::int64_t> parse_int_list(std::string_view text, char separator = ',');
Representation parse_representation(std::string_view text);
OrderTuple parse_order_tuple(const GroupSpec& spec, std::string_view text);

Representation representation_from_json(const Json& j);
OrderTuple order_tuple_from_json(const GroupSpec& spec, const Json& j);

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);
void to_json(Json& j, const LaurentPoly& poly);
void from_json(const Json& j, LaurentPoly& poly);
void to_json(Json& j, const Degree& d);
void to_json(Json& j, const Representation& rep);
void to_json(Json& j, const OrderTuple& t);
void to_json(Json& j, const ConvergenceReport& r);
void to_json(Json& j, const SingularityVerdict& v);
void to_json(Json& j, const DimensionCriterion& c);
void to_json(Json& j, const SylowVerdict& v);
void to_json(Json& j, const SeriesTruncation& s);
void to_json(Json& j, const TrajectoryRow& row);
void to_json(Json& j, const SweepReport& r);

Degree degree_from_json(const Json& j);

/// S and D tables of a representation.
Json invariants_json(const Representation& rep);

/// All order tuples with entries <= bound: class, connectivity, upper jumps,
/// and the fiber grouping by upper jumps. With a representation, also v and
/// the stratum term.
Json strata_json(const GroupSpec& spec, std::int64_t bound, const Representation* rep = nullptr);

}  // namespace wmk
