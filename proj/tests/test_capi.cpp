// Exercises the shared library through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "wmk/wmk.h"

using nlohmann::json;

namespace {

struct RepDeleter {
  void operator()(wmk_rep* r) const { wmk_rep_destroy(r); }
};
using Rep = std::unique_ptr<wmk_rep, RepDeleter>;

Rep parse(const char* text) {
  wmk_rep* r = nullptr;
  REQUIRE(wmk_rep_parse(text, &r) == WMK_OK);
  return Rep(r);
}

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  wmk_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("handles and accessors") {
  CHECK(std::string(wmk_version()) == "1.0.0");
  const int64_t dims[] = {1, 5, 3};
  wmk_rep* raw = nullptr;
  REQUIRE(wmk_rep_create(2, 3, dims, 3, &raw) == WMK_OK);
  Rep rep(raw);
  int64_t v = 0;
  int n = 0;
  CHECK(wmk_rep_prime(rep.get(), &v) == WMK_OK);
  CHECK(v == 2);
  CHECK(wmk_rep_exponent(rep.get(), &n) == WMK_OK);
  CHECK(n == 3);
  CHECK(wmk_rep_dimension(rep.get(), &v) == WMK_OK);
  CHECK(v == 9);
  char* s = nullptr;
  REQUIRE(wmk_rep_to_json(rep.get(), &s) == WMK_OK);
  CHECK(take(s) == json::parse(R"({"p":2,"n":3,"dims":[5,3,1]})"));

  wmk_rep* sub = nullptr;
  REQUIRE(wmk_rep_restrict(rep.get(), &sub) == WMK_OK);
  Rep w(sub);
  REQUIRE(wmk_rep_to_json(w.get(), &s) == WMK_OK);
  CHECK(take(s) == json::parse(R"({"p":2,"n":2,"dims":[3,2,2,1,1]})"));

  wmk_rep* from_json = nullptr;
  REQUIRE(wmk_rep_from_json(R"({"p":3,"n":1,"dims":[3]})", &from_json) == WMK_OK);
  Rep r3(from_json);
  wmk_rep* bad = nullptr;
  CHECK(wmk_rep_restrict(r3.get(), &bad) == WMK_ERROR_DOMAIN);
  CHECK(bad == nullptr);
}

TEST_CASE("errors map to status codes") {
  wmk_rep* r = nullptr;
  CHECK(wmk_rep_parse("p=2,n=3,dims=5+x", &r) == WMK_ERROR_PARSE);
  CHECK(std::string(wmk_last_error()).size() > 0);
  CHECK(wmk_rep_parse("p=4,n=1,dims=1", &r) == WMK_ERROR_DOMAIN);
  CHECK(wmk_rep_from_json("{", &r) == WMK_ERROR_PARSE);
  CHECK(wmk_rep_parse(nullptr, &r) == WMK_ERROR_ARGUMENT);
  CHECK(wmk_rep_parse("p=2,n=1,dims=1", nullptr) == WMK_ERROR_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(std::string(wmk_status_name(WMK_ERROR_NOT_CONNECTED)) == "not connected");

  auto rep = parse("p=2,n=2,dims=3");
  int64_t v = 0;
  const int64_t disconnected[] = {WMK_BOTTOM, 1};
  CHECK(wmk_v_orders(rep.get(), disconnected, 2, &v) == WMK_OK);
  const int64_t not_admissible[] = {1, 4};
  CHECK(wmk_v_jumps(rep.get(), not_admissible, 2, &v) == WMK_ERROR_DOMAIN);
  const int64_t short_tuple[] = {1};
  CHECK(wmk_v_orders(rep.get(), short_tuple, 1, &v) == WMK_ERROR_DOMAIN);

  char* s = nullptr;
  auto decomposable = parse("p=2,n=3,dims=6+1");
  CHECK(wmk_dimension_criterion_json(decomposable.get(), &s) == WMK_ERROR_HYPOTHESIS);
  CHECK(s == nullptr);
  CHECK(std::string(wmk_last_error()).find("indecomposable") != std::string::npos);
}

TEST_CASE("numeric entry points") {
  int64_t v = 0;
  CHECK(wmk_digit_sum(7, 2, 3, 2, &v) == WMK_OK);
  CHECK(v == 3);
  CHECK(wmk_digit_sum(9, 2, 3, 0, &v) == WMK_ERROR_DOMAIN);

  auto w3 = parse("p=2,n=2,dims=3");
  const int64_t u[] = {1, 2};
  CHECK(wmk_v_jumps(w3.get(), u, 2, &v) == WMK_OK);
  CHECK(v == 2);
  const int64_t orders[] = {1, 1};
  CHECK(wmk_v_orders(w3.get(), orders, 2, &v) == WMK_OK);
  CHECK(v == 2);
  int flag = -1;
  CHECK(wmk_is_admissible(2, u, 2, &flag) == WMK_OK);
  CHECK(flag == 1);
  const int64_t u_bad[] = {2, 5};
  CHECK(wmk_is_admissible(2, u_bad, 2, &flag) == WMK_OK);
  CHECK(flag == 0);

  wmk_convergence st;
  CHECK(wmk_convergence_status(parse("p=2,n=3,dims=6").get(), &st) == WMK_OK);
  CHECK(st == WMK_STRICT);
  CHECK(wmk_convergence_status(parse("p=2,n=1,dims=2").get(), &st) == WMK_OK);
  CHECK(st == WMK_BOUNDED_BOUNDARY);
  CHECK(wmk_convergence_status(parse("p=2,n=1,dims=1").get(), &st) == WMK_OK);
  CHECK(st == WMK_UNBOUNDED);

  CHECK(wmk_is_effective(parse("p=2,n=3,dims=4+4").get(), &flag) == WMK_OK);
  CHECK(flag == 0);
  CHECK(wmk_has_pseudo_reflection(parse("p=2,n=3,dims=5").get(), &flag) == WMK_OK);
  CHECK(flag == 1);
  CHECK(wmk_has_pseudo_reflection(parse("p=2,n=3,dims=6").get(), &flag) == WMK_OK);
  CHECK(flag == 0);
}

TEST_CASE("JSON reports") {
  char* s = nullptr;
  auto w6 = parse("p=2,n=3,dims=6");
  REQUIRE(wmk_classify_json(w6.get(), 0, &s) == WMK_OK);
  auto c = take(s);
  CHECK(c["mode"] == "quotient");
  CHECK(c["verdict"]["status"] == "STRICT");
  CHECK(c["verdict"]["c_values"] == json::parse(R"(["-9/16","-1/2","-1/2"])"));
  REQUIRE(wmk_classify_json(w6.get(), 1, &s) == WMK_OK);
  CHECK(take(s)["mode"] == "sylow");

  auto w3 = parse("p=3,n=1,dims=3");
  wmk_series_options opts{8, nullptr, 0, 0, 2};
  REQUIRE(wmk_series_json(w3.get(), &opts, &s) == WMK_OK);
  auto series = take(s);
  CHECK(series["partial_sum_text"] == "L^3 + 2*L^2 - 2*L^-1");
  CHECK(series["max_term_dim"] == 3);

  const int64_t bounds[] = {2, 8, 26};
  REQUIRE(wmk_trajectory_json(w3.get(), bounds, 3, 1, &s) == WMK_OK);
  auto traj = take(s);
  REQUIRE(traj.size() == 3);
  CHECK(traj[2]["tail_max_dim"] == -1);
  const int64_t decreasing[] = {5, 2};
  CHECK(wmk_trajectory_json(w3.get(), decreasing, 2, 1, &s) == WMK_ERROR_DOMAIN);

  REQUIRE(wmk_strata_json(2, 2, 3, nullptr, &s) == WMK_OK);
  CHECK(take(s)["count"] == 9);
  REQUIRE(wmk_sweep_json(3, 3, &s) == WMK_OK);
  auto sw = take(s);
  CHECK(sw["first_log_canonical"] == 11);
  CHECK(sw["first_canonical"] == 12);
  REQUIRE(wmk_invariants_json(w3.get(), &s) == WMK_OK);
  CHECK(take(s)["dimension"] == 3);
}

TEST_CASE("error messages are per thread") {
  wmk_rep* r = nullptr;
  CHECK(wmk_rep_parse("garbage", &r) == WMK_ERROR_PARSE);
  const std::string here = wmk_last_error();
  std::string there;
  std::thread t([&] {
    wmk_rep* q = nullptr;
    wmk_rep_parse("p=4,n=1,dims=1", &q);
    there = wmk_last_error();
  });
  t.join();
  CHECK(std::string(wmk_last_error()) == here);
  CHECK(here != there);
}
