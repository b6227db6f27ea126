#include "wmk/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <string>

#include "wmk/digits.hpp"
#include "wmk/errors.hpp"
#include "wmk/vfunction.hpp"

namespace wmk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int to_exponent(std::int64_t n) {
  if (n < 1 || n > 64) throw DomainError("n = " + std::to_string(n) + " must be in [1, 64]");
  return static_cast<int>(n);
}

Json int_array(std::span<const std::int64_t> values) { return Json(std::vector<std::int64_t>(values.begin(), values.end())); }

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text, char separator) {
  if (trim(text).empty()) throw ParseError("empty integer list");
  std::vector<std::int64_t> out;
  for (auto part : split(text, separator)) out.push_back(parse_int(part));
  return out;
}

Representation parse_representation(std::string_view text) {
  std::optional<std::int64_t> p, n;
  std::optional<std::vector<std::int64_t>> dims;
  for (auto field : split(text, ',')) {
    field = trim(field);
    auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("representation field '" + std::string(field) + "' is not key=value");
    }
    auto key = trim(field.substr(0, eq));
    auto value = field.substr(eq + 1);
    if (key == "p" && !p) {
      p = parse_int(value);
    } else if (key == "n" && !n) {
      n = parse_int(value);
    } else if (key == "dims" && !dims) {
      dims = parse_int_list(value, '+');
    } else {
      throw ParseError("unexpected or repeated representation key '" + std::string(key) + "'");
    }
  }
  if (!p || !n || !dims) throw ParseError("representation needs p=, n= and dims= (e.g. p=2,n=3,dims=5+3+1)");
  return Representation(GroupSpec(*p, to_exponent(*n)), std::move(*dims));
}

OrderTuple parse_order_tuple(const GroupSpec& spec, std::string_view text) {
  std::vector<OrderEntry> entries;
  for (auto part : split(text, ',')) {
    part = trim(part);
    if (part == "_") {
      entries.push_back(kBottom);
    } else {
      entries.push_back(parse_int(part));
    }
  }
  return OrderTuple(spec, std::move(entries));
}

Representation representation_from_json(const Json& j) {
  try {
    const auto p = j.at("p").get<std::int64_t>();
    const auto n = j.at("n").get<std::int64_t>();
    auto dims = j.at("dims").get<std::vector<std::int64_t>>();
    return Representation(GroupSpec(p, to_exponent(n)), std::move(dims));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("representation JSON: ") + e.what());
  }
}

OrderTuple order_tuple_from_json(const GroupSpec& spec, const Json& j) {
  if (!j.is_array()) throw ParseError("order tuple JSON must be an array");
  std::vector<OrderEntry> entries;
  for (const auto& e : j) {
    if (e.is_null()) {
      entries.push_back(kBottom);
    } else if (e.is_number_integer()) {
      entries.push_back(e.get<std::int64_t>());
    } else {
      throw ParseError("order tuple entries must be integers or null");
    }
  }
  return OrderTuple(spec, std::move(entries));
}

void to_json(Json& j, const Rational& r) { j = r.to_string(); }

void from_json(const Json& j, Rational& r) {
  if (!j.is_string()) throw ParseError("rational JSON must be a \"num/den\" string");
  r = Rational::parse(j.get<std::string>());
}

void to_json(Json& j, const LaurentPoly& poly) {
  j = Json::array();
  for (const auto& [e, c] : poly.terms()) j.push_back(Json::array({e, c.str()}));
}

void from_json(const Json& j, LaurentPoly& poly) {
  if (!j.is_array()) throw ParseError("Laurent polynomial JSON must be an array of [exponent, \"coefficient\"]");
  LaurentPoly out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_string()) {
      throw ParseError("Laurent polynomial term must be [exponent, \"coefficient\"]");
    }
    const auto text = pair[1].get<std::string>();
    if (text.find('/') != std::string::npos) throw ParseError("coefficient must be an integer");
    out.add_monomial(Rational::parse(text).numerator(), pair[0].get<std::int64_t>());
  }
  poly = std::move(out);
}

void to_json(Json& j, const Degree& d) {
  if (d.is_finite()) {
    j = d.value();
  } else {
    j = nullptr;
  }
}

Degree degree_from_json(const Json& j) {
  if (j.is_null()) return kNegInfinity;
  if (!j.is_number_integer()) throw ParseError("degree must be an integer or null");
  return j.get<std::int64_t>();
}

void to_json(Json& j, const Representation& rep) {
  j = {{"p", rep.spec().p()}, {"n", rep.spec().n()}, {"dims", int_array(rep.summands())}};
}

void to_json(Json& j, const OrderTuple& t) {
  j = Json::array();
  for (const auto& e : t.entries()) {
    if (e) {
      j.push_back(*e);
    } else {
      j.push_back(nullptr);
    }
  }
}

void to_json(Json& j, const ConvergenceReport& r) {
  j = {{"c_values", r.c_values}, {"status", to_string(r.status)}};
}

void to_json(Json& j, const SingularityVerdict& v) {
  j = {{"c_values", v.report.c_values},
       {"status", to_string(v.report.status)},
       {"log_canonical", v.log_canonical},
       {"canonical", to_string(v.canonical)},
       {"hypotheses_ok", v.hypotheses_ok},
       {"warnings", v.warnings},
       {"notes", v.notes}};
}

void to_json(Json& j, const DimensionCriterion& c) {
  j = {{"dimension", c.dimension},
       {"canonical_bound", c.canonical_bound},
       {"log_canonical_bound", c.log_canonical_bound},
       {"canonical", c.canonical},
       {"log_canonical", c.log_canonical},
       {"threshold_proven", c.threshold_proven},
       {"criterion_status", to_string(c.criterion_status)},
       {"agrees_with_criterion", c.agrees_with_criterion},
       {"notes", c.notes}};
}

void to_json(Json& j, const SylowVerdict& v) {
  j = {{"c_values", v.report.c_values},
       {"status", to_string(v.report.status)},
       {"log_terminal", v.log_terminal},
       {"log_canonical", v.log_canonical},
       {"hypotheses_ok", v.hypotheses_ok},
       {"warnings", v.warnings}};
}

void to_json(Json& j, const SeriesTruncation& s) {
  const bool uniform = std::all_of(s.bounds.begin(), s.bounds.end(), [&](auto b) { return b == s.bounds.front(); });
  j = {{"bound", uniform ? Json(s.bounds.front()) : Json(s.bounds)},
       {"partial_sum", s.partial_sum},
       {"partial_sum_degree", s.partial_sum.degree()},
       {"partial_sum_text", s.partial_sum.to_string()},
       {"term_count", s.term_count},
       {"max_term_dim", s.max_term_dim},
       {"tail_max_dim", s.tail_max_dim}};
  if (!s.per_stratum.empty()) {
    Json rows = Json::array();
    for (const auto& [tuple, t] : s.per_stratum) {
      rows.push_back({{"orders", tuple}, {"term", t}, {"term_text", t.to_string()}, {"term_degree", t.degree()}});
    }
    j["per_stratum"] = std::move(rows);
  }
}

void to_json(Json& j, const TrajectoryRow& row) {
  j = {{"bound", row.bound},
       {"num_strata", row.num_strata},
       {"max_term_dim", row.max_term_dim},
       {"tail_max_dim", row.tail_max_dim},
       {"partial_sum_degree", row.partial_sum.degree()},
       {"partial_sum", row.partial_sum},
       {"partial_sum_text", row.partial_sum.to_string()}};
}

void to_json(Json& j, const SweepReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"d", row.dimension},
                    {"effective", row.effective},
                    {"pseudo_reflection", row.pseudo_reflection},
                    {"c_values", row.report.c_values},
                    {"status", to_string(row.report.status)},
                    {"log_canonical", row.log_canonical},
                    {"canonical", to_string(row.canonical)}});
  }
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  j = {{"p", r.p},
       {"n", r.n},
       {"rows", std::move(rows)},
       {"log_canonical_bound", r.log_canonical_bound},
       {"canonical_bound", r.canonical_bound},
       {"first_log_canonical", opt(r.first_log_canonical)},
       {"first_canonical", opt(r.first_canonical)},
       {"thresholds_consistent", r.thresholds_consistent}};
}

Json invariants_json(const Representation& rep) {
  const GroupSpec& spec = rep.spec();
  Json summands = Json::array();
  for (std::int64_t e : rep.summands()) {
    Json digits = base_p_digits(e, spec).digits;
    summands.push_back({{"dim", e},
                        {"digits", std::move(digits)},
                        {"S", digit_sums(e, spec)},
                        {"D", invariant_D_all(Representation::indecomposable(spec, e))}});
  }
  return {{"representation", rep},
          {"dimension", rep.dimension()},
          {"effective", is_effective(rep)},
          {"pseudo_reflection", has_pseudo_reflection(rep)},
          {"summands", std::move(summands)},
          {"D", invariant_D_all(rep)}};
}

Json strata_json(const GroupSpec& spec, std::int64_t bound, const Representation* rep) {
  const OrderTupleGrid grid(spec, bound);
  Json strata = Json::array();
  std::map<std::vector<std::int64_t>, std::vector<OrderTuple>> fibers;
  grid.for_each([&](const OrderTuple& j) {
    const LaurentPoly cls = stratum_class(j);
    Json row = {{"orders", j}, {"class", cls}, {"class_text", cls.to_string()}, {"connected", j.is_connected()}};
    if (j.is_connected()) {
      const auto u = upper_jumps(j);
      row["upper_jumps"] = int_array(u.entries());
      fibers[std::vector<std::int64_t>(u.entries().begin(), u.entries().end())].push_back(j);
    }
    if (rep) {
      row["v"] = v_stratum(*rep, j);
      const LaurentPoly t = term(*rep, j);
      row["term"] = t;
      row["term_text"] = t.to_string();
    }
    strata.push_back(std::move(row));
  });
  Json grouped = Json::array();
  for (const auto& [u, members] : fibers) {
    LaurentPoly total;
    for (const auto& j : members) total += stratum_class(j);
    Json entry = {{"upper_jumps", u},
                  {"lower_jumps", lower_jumps(JumpSequence(spec, u)).entries},
                  {"orders", members},
                  {"class_sum", total},
                  {"class_sum_text", total.to_string()},
                  {"class_sum_degree", total.degree()}};
    if (rep) entry["v"] = v_jumps(*rep, JumpSequence(spec, u));
    grouped.push_back(std::move(entry));
  }
  return {{"p", spec.p()}, {"n", spec.n()}, {"bound", bound}, {"count", grid.size()},
          {"strata", std::move(strata)}, {"fibers", std::move(grouped)}};
}

}  // namespace wmk
