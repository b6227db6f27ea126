// Command-line front end. Talks to the library only through wmk.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmk/wmk.h"

using nlohmann::json;

namespace {

// Library failure carried up to main with its status.
struct Failure : std::runtime_error {
  wmk_status status;
  Failure(wmk_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(wmk_status s) {
  if (s != WMK_OK) throw Failure(s, wmk_last_error());
}

struct RepDeleter {
  void operator()(wmk_rep* r) const { wmk_rep_destroy(r); }
};
using Rep = std::unique_ptr<wmk_rep, RepDeleter>;

Rep load_rep(const std::string& text) {
  wmk_rep* r = nullptr;
  check(wmk_rep_parse(text.c_str(), &r));
  return Rep(r);
}

// Status first, string second: the string pointer is only read after the call.
json take(wmk_status s, char** out) {
  check(s);
  json j = json::parse(*out);
  wmk_string_free(*out);
  *out = nullptr;
  return j;
}

std::vector<int64_t> parse_list(const std::string& text, bool allow_bottom) {
  std::vector<int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    if (allow_bottom && item == "_") {
      out.push_back(WMK_BOTTOM);
      continue;
    }
    std::size_t used = 0;
    int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || (allow_bottom && v < 0)) {
      throw Failure(WMK_ERROR_PARSE, "bad list entry '" + item + "' in '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty() || text.back() == ',') throw Failure(WMK_ERROR_PARSE, "bad list '" + text + "'");
  return out;
}

std::string join(const json& arr, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_null() ? "_" : arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string tuple(const json& arr) { return "(" + join(arr) + ")"; }
std::string degree(const json& d) { return d.is_null() ? "-inf" : d.dump(); }
const char* yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Failure(WMK_ERROR_ARGUMENT, "cannot write " + path);
  return out;
}

// ---- commands ----

void cmd_invariants(const std::string& rep_text, bool as_json) {
  const Rep rep = load_rep(rep_text);
  char* out = nullptr;
  const json j = take(wmk_invariants_json(rep.get(), &out), &out);
  if (as_json) return print_json(j);
  std::printf("representation     %s\n", rep_text.c_str());
  std::printf("dimension          %s\n", j["dimension"].dump().c_str());
  std::printf("effective          %s\n", yes_no(j["effective"]));
  std::printf("pseudo-reflection  %s\n", yes_no(j["pseudo_reflection"]));
  std::printf("\n%6s  %-16s %-24s %s\n", "dim", "digits", "S", "D");
  for (const auto& s : j["summands"]) {
    std::printf("%6s  %-16s %-24s %s\n", s["dim"].dump().c_str(), tuple(s["digits"]).c_str(),
                tuple(s["S"]).c_str(), tuple(s["D"]).c_str());
  }
  if (j["summands"].size() == 1) std::printf("\nS=%s\n", tuple(j["summands"][0]["S"]).c_str());
  std::printf("D=%s\n", tuple(j["D"]).c_str());
}

void print_verdict(const json& v, bool sylow) {
  std::printf("status             %s\n", v["status"].get<std::string>().c_str());
  std::printf("c_m                %s\n", tuple(v["c_values"]).c_str());
  if (sylow) std::printf("log terminal       %s\n", yes_no(v["log_terminal"]));
  std::printf("log canonical      %s\n", yes_no(v["log_canonical"]));
  if (!sylow) std::printf("canonical          %s\n", v["canonical"].get<std::string>().c_str());
  std::printf("hypotheses         %s\n", v["hypotheses_ok"].get<bool>() ? "ok" : "violated");
  for (const auto& w : v["warnings"]) std::printf("warning: %s\n", w.get<std::string>().c_str());
  if (v.contains("notes"))
    for (const auto& n : v["notes"]) std::printf("note: %s\n", n.get<std::string>().c_str());
}

void cmd_classify(const std::string& rep_text, bool sylow, bool criterion, bool as_json) {
  const Rep rep = load_rep(rep_text);
  char* out = nullptr;
  json j = take(wmk_classify_json(rep.get(), sylow ? 1 : 0, &out), &out);
  if (criterion) j["dimension_criterion"] = take(wmk_dimension_criterion_json(rep.get(), &out), &out);
  if (as_json) return print_json(j);
  std::printf("representation     %s (%s)\n", rep_text.c_str(), sylow ? "Sylow" : "quotient");
  print_verdict(j["verdict"], sylow);
  if (!criterion) return;
  const json& c = j["dimension_criterion"];
  std::printf("\ndimension criterion\n");
  std::printf("  d = %s, log canonical iff d >= %s, canonical if d >= %s\n", c["dimension"].dump().c_str(),
              c["log_canonical_bound"].dump().c_str(), c["canonical_bound"].dump().c_str());
  std::printf("  log canonical      %s\n", yes_no(c["log_canonical"]));
  std::printf("  canonical          %s\n", yes_no(c["canonical"]));
  std::printf("  threshold proven   %s\n", yes_no(c["threshold_proven"]));
  std::printf("  agrees with c_m    %s\n", yes_no(c["agrees_with_criterion"]));
  for (const auto& n : c["notes"]) std::printf("  note: %s\n", n.get<std::string>().c_str());
}

void cmd_vfunc(const std::string& rep_text, const std::string& jumps, const std::string& orders, bool as_json) {
  const Rep rep = load_rep(rep_text);
  int64_t v = 0;
  json j = {{"representation", rep_text}};
  if (!jumps.empty()) {
    const auto u = parse_list(jumps, false);
    check(wmk_v_jumps(rep.get(), u.data(), u.size(), &v));
    j["jumps"] = u;
  } else {
    const auto t = parse_list(orders, true);
    check(wmk_v_orders(rep.get(), t.data(), t.size(), &v));
    json arr = json::array();
    for (auto x : t) arr.push_back(x == WMK_BOTTOM ? json(nullptr) : json(x));
    j["orders"] = arr;
  }
  j["v"] = v;
  if (as_json) return print_json(j);
  std::printf("%lld\n", static_cast<long long>(v));
}

void cmd_strata(const std::string& rep_text, int64_t p, int n, int64_t bound, bool as_json) {
  Rep rep;
  if (!rep_text.empty()) {
    rep = load_rep(rep_text);
    check(wmk_rep_prime(rep.get(), &p));
    check(wmk_rep_exponent(rep.get(), &n));
  } else if (p == 0 || n == 0) {
    throw Failure(WMK_ERROR_ARGUMENT, "strata needs --rep, or both --p and --n");
  }
  char* out = nullptr;
  const json j = take(wmk_strata_json(p, n, bound, rep.get(), &out), &out);
  if (as_json) return print_json(j);
  std::printf("p=%lld n=%d bound=%lld: %s order tuples\n\n", static_cast<long long>(p), n,
              static_cast<long long>(bound), j["count"].dump().c_str());
  std::printf("%-16s %-16s %-6s %-22s", "orders", "upper jumps", "v", "class");
  if (rep) std::printf(" term");
  std::printf("\n");
  for (const auto& s : j["strata"]) {
    const std::string u = s.contains("upper_jumps") ? tuple(s["upper_jumps"]) : "-";
    const std::string v = s.contains("v") ? s["v"].dump() : "-";
    std::printf("%-16s %-16s %-6s %-22s", tuple(s["orders"]).c_str(), u.c_str(), v.c_str(),
                s["class_text"].get<std::string>().c_str());
    if (rep) std::printf(" %s", s["term_text"].get<std::string>().c_str());
    std::printf("\n");
  }
  std::printf("\nfibers by upper jumps\n");
  for (const auto& f : j["fibers"]) {
    std::string members;
    for (const auto& o : f["orders"]) members += (members.empty() ? "" : " ") + tuple(o);
    std::printf("u=%-14s l=%-16s degree %-4s %s\n", tuple(f["upper_jumps"]).c_str(),
                tuple(f["lower_jumps"]).c_str(), degree(f["class_sum_degree"]).c_str(), members.c_str());
  }
}

void write_series_csv(const std::string& path, const json& rows) {
  auto out = open_csv(path);
  out << "bound,num_strata,max_term_dim,tail_max_dim,partial_sum_degree,partial_sum_json\n";
  for (const auto& r : rows) {
    out << r["bound"].dump() << ',' << r["num_strata"].dump() << ',' << degree(r["max_term_dim"]) << ','
        << degree(r["tail_max_dim"]) << ',' << degree(r["partial_sum_degree"]) << ','
        << csv_quote(r["partial_sum"].dump()) << '\n';
  }
}

struct SeriesArgs {
  std::string rep;
  int64_t bound = 0;
  std::string bound_vector;
  std::string trajectory;
  bool per_stratum = false;
  std::string csv;
  bool json = false;
};

void cmd_series(const SeriesArgs& a) {
  const Rep rep = load_rep(a.rep);
  char* out = nullptr;
  if (!a.trajectory.empty()) {
    const auto bounds = parse_list(a.trajectory, false);
    const json rows = take(wmk_trajectory_json(rep.get(), bounds.data(), bounds.size(), 0, &out), &out);
    if (!a.csv.empty()) write_series_csv(a.csv, rows);
    if (a.json) return print_json(rows);
    std::printf("%8s %12s %14s %14s %10s  %s\n", "bound", "strata", "max_term_dim", "tail_max_dim", "degree",
                "partial sum");
    for (const auto& r : rows) {
      std::printf("%8s %12s %14s %14s %10s  %s\n", r["bound"].dump().c_str(), r["num_strata"].dump().c_str(),
                  degree(r["max_term_dim"]).c_str(), degree(r["tail_max_dim"]).c_str(),
                  degree(r["partial_sum_degree"]).c_str(), r["partial_sum_text"].get<std::string>().c_str());
    }
    return;
  }

  std::vector<int64_t> vec;
  wmk_series_options opts{a.bound, nullptr, 0, a.per_stratum ? 1 : 0, 0};
  if (!a.bound_vector.empty()) {
    vec = parse_list(a.bound_vector, false);
    opts.bound_vector = vec.data();
    opts.bound_vector_len = vec.size();
  }
  const json s = take(wmk_series_json(rep.get(), &opts, &out), &out);
  if (!a.csv.empty()) {
    json row = s;
    row["num_strata"] = s["term_count"];
    write_series_csv(a.csv, json::array({row}));
  }
  if (a.json) return print_json(s);
  std::printf("representation     %s\n", a.rep.c_str());
  std::printf("bound              %s\n", s["bound"].is_array() ? tuple(s["bound"]).c_str() : s["bound"].dump().c_str());
  std::printf("strata             %s\n", s["term_count"].dump().c_str());
  std::printf("partial sum        %s\n", s["partial_sum_text"].get<std::string>().c_str());
  std::printf("degree             %s\n", degree(s["partial_sum_degree"]).c_str());
  std::printf("max_term_dim       %s\n", degree(s["max_term_dim"]).c_str());
  std::printf("tail_max_dim       %s\n", degree(s["tail_max_dim"]).c_str());
  if (s.contains("per_stratum")) {
    std::printf("\n%-16s %s\n", "orders", "term");
    for (const auto& r : s["per_stratum"]) {
      std::printf("%-16s %s\n", tuple(r["orders"]).c_str(), r["term_text"].get<std::string>().c_str());
    }
  }
}

void cmd_sweep(int64_t p, int n, const std::string& csv, bool as_json) {
  char* out = nullptr;
  const json j = take(wmk_sweep_json(p, n, &out), &out);
  if (!csv.empty()) {
    auto f = open_csv(csv);
    f << "d,effective,pseudo_reflection,status,log_canonical,canonical,c_values\n";
    for (const auto& r : j["rows"]) {
      f << r["d"].dump() << ',' << r["effective"].dump() << ',' << r["pseudo_reflection"].dump() << ','
        << r["status"].get<std::string>() << ',' << r["log_canonical"].dump() << ','
        << r["canonical"].get<std::string>() << ',' << csv_quote(join(r["c_values"], ";")) << '\n';
    }
  }
  if (as_json) return print_json(j);
  std::printf("%5s %4s %4s %-17s %-4s %-34s %s\n", "d", "eff", "pr", "status", "lc", "canonical", "c_m");
  for (const auto& r : j["rows"]) {
    std::printf("%5s %4s %4s %-17s %-4s %-34s %s\n", r["d"].dump().c_str(), yes_no(r["effective"]),
                yes_no(r["pseudo_reflection"]), r["status"].get<std::string>().c_str(), yes_no(r["log_canonical"]),
                r["canonical"].get<std::string>().c_str(), tuple(r["c_values"]).c_str());
  }
  std::printf("\nthresholds: log canonical iff d >= %s, canonical if d >= %s\n",
              j["log_canonical_bound"].dump().c_str(), j["canonical_bound"].dump().c_str());
  std::printf("first log-canonical d = %s\n", j["first_log_canonical"].is_null() ? "none" : j["first_log_canonical"].dump().c_str());
  std::printf("first canonical d = %s\n", j["first_canonical"].is_null() ? "none" : j["first_canonical"].dump().c_str());
  std::printf("thresholds consistent with c_m: %s\n", yes_no(j["thresholds_consistent"]));
}

int exit_code(wmk_status s) {
  switch (s) {
    case WMK_ERROR_PARSE:
    case WMK_ERROR_ARGUMENT:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wild McKay correspondence for Z/p^nZ: invariants, v-function, motivic series, singularity class"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wmk_version()));

  std::string rep;
  bool as_json = false;
  auto add_rep = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--rep", rep, "representation, e.g. p=2,n=3,dims=5+3+1");
    if (required) opt->required();
    c->add_flag("--json", as_json, "emit JSON");
  };

  auto* inv = app.add_subcommand("invariants", "digit sums S and growth rates D");
  add_rep(inv, true);

  bool sylow = false, criterion = false;
  auto* cls = app.add_subcommand("classify", "convergence status and singularity class");
  add_rep(cls, true);
  cls->add_flag("--sylow", sylow, "treat the group as a Sylow subgroup (log terminal / log canonical)");
  cls->add_flag("--dimension-criterion", criterion, "also apply the dimension thresholds (indecomposable only)");

  std::string jumps, orders;
  auto* vf = app.add_subcommand("vfunc", "v at a jump sequence or a stratum");
  add_rep(vf, true);
  auto* oj = vf->add_option("--jumps", jumps, "upper jumps u0,u1,...");
  auto* oo = vf->add_option("--orders", orders, "pole orders j0,j1,... with _ for BOTTOM");
  oj->excludes(oo);

  int64_t p = 0, bound = 0;
  int n = 0;
  auto* st = app.add_subcommand("strata", "order tuples, classes and fibers up to a bound");
  add_rep(st, false);
  st->add_option("--p", p, "prime");
  st->add_option("--n", n, "exponent");
  st->add_option("--bound", bound, "largest pole order")->required();

  SeriesArgs sa;
  auto* se = app.add_subcommand("series", "truncated motivic integral");
  add_rep(se, true);
  auto* ob = se->add_option("--bound", sa.bound, "uniform bound on every pole order");
  auto* obv = se->add_option("--bound-vector", sa.bound_vector, "per-coordinate bounds b0,b1,...");
  auto* otr = se->add_option("--trajectory", sa.trajectory, "increasing bounds b1,b2,... (one row each)");
  ob->excludes(obv)->excludes(otr);
  obv->excludes(otr);
  se->add_flag("--per-stratum", sa.per_stratum, "list every stratum term");
  se->add_option("--csv", sa.csv, "write a CSV table to this path");

  std::string sweep_csv;
  auto* sw = app.add_subcommand("sweep", "classify every indecomposable d for (p,n)");
  sw->add_option("--p", p, "prime")->required();
  sw->add_option("--n", n, "exponent")->required();
  sw->add_option("--csv", sweep_csv, "write a CSV table to this path");
  sw->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*inv) cmd_invariants(rep, as_json);
    if (*cls) cmd_classify(rep, sylow, criterion, as_json);
    if (*vf) {
      if (!*oj && !*oo) throw Failure(WMK_ERROR_ARGUMENT, "vfunc needs --jumps or --orders");
      cmd_vfunc(rep, jumps, orders, as_json);
    }
    if (*st) cmd_strata(rep, p, n, bound, as_json);
    if (*se) {
      if (!*ob && !*obv && !*otr) throw Failure(WMK_ERROR_ARGUMENT, "series needs --bound, --bound-vector or --trajectory");
      sa.rep = rep;
      sa.json = as_json;
      cmd_series(sa);
    }
    if (*sw) cmd_sweep(p, n, sweep_csv, as_json);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error (%s): %s\n", wmk_status_name(f.status), f.what());
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
