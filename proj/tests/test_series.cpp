#include <doctest.h>

#include <random>

#include "wmk/convergence.hpp"
#include "wmk/errors.hpp"
#include "wmk/series.hpp"
#include "wmk/vfunction.hpp"

using wmk::Degree;
using wmk::GroupSpec;
using wmk::kBottom;
using wmk::LaurentPoly;
using wmk::OrderTuple;
using wmk::Representation;

namespace {

const LaurentPoly gm = LaurentPoly::gm();
LaurentPoly Lp(std::int64_t e) { return LaurentPoly::power_of_L(e); }

std::vector<Degree> column(const std::vector<wmk::TrajectoryRow>& rows, bool tail) {
  std::vector<Degree> out;
  for (const auto& r : rows) out.push_back(tail ? r.tail_max_dim : r.max_term_dim);
  return out;
}

}  // namespace

TEST_CASE("term examples") {
  CHECK(wmk::term(Representation(GroupSpec(2, 1), {2}), OrderTuple(GroupSpec(2, 1), {3})) == gm * Lp(1));
  CHECK(wmk::term(Representation(GroupSpec(2, 2), {3}), OrderTuple(GroupSpec(2, 2), {kBottom, 1})) == gm * Lp(2));
  const GroupSpec s(3, 2);
  CHECK(wmk::term(Representation(s, {7, 2}), OrderTuple(s, {kBottom, kBottom})) == Lp(9));
}

TEST_CASE("truncated_integral examples") {
  const auto a = wmk::truncated_integral(Representation(GroupSpec(2, 1), {2}), 5);
  CHECK(a.partial_sum == Lp(2) + LaurentPoly(3) * (Lp(2) - Lp(1)));
  CHECK(a.max_term_dim == Degree(2));
  CHECK(a.term_count == 4);

  const auto b = wmk::truncated_integral(Representation(GroupSpec(3, 1), {3}), 8);
  CHECK(b.partial_sum == Lp(3) + LaurentPoly(2) * Lp(2) - LaurentPoly(2) * Lp(-1));
  CHECK(b.max_term_dim == Degree(3));
  CHECK(b.term_count == 7);

  const auto c = wmk::truncated_integral(Representation(GroupSpec(2, 1), {1}), 1);
  CHECK(c.partial_sum == Lp(1) + gm * Lp(1));
  CHECK(c.max_term_dim == Degree(2));
}

TEST_CASE("per-stratum output sums to the partial sum in enumeration order") {
  const Representation rep(GroupSpec(2, 2), {3, 2});
  const auto s = wmk::truncated_integral(rep, 7, {true, 1});
  REQUIRE(s.per_stratum.size() == s.term_count);
  LaurentPoly total;
  Degree best = wmk::kNegInfinity;
  for (std::size_t i = 0; i < s.per_stratum.size(); ++i) {
    const auto& [j, t] = s.per_stratum[i];
    if (i) REQUIRE(s.per_stratum[i - 1].first < j);
    REQUIRE(t == wmk::term(rep, j));
    total += t;
    best = std::max(best, t.degree());
  }
  CHECK(total == s.partial_sum);
  CHECK(best == s.max_term_dim);
}

TEST_CASE("dimension_trajectory examples") {
  const Representation w2(GroupSpec(2, 1), {2});
  const std::vector<std::int64_t> b1{1, 3, 5, 9, 17};
  for (const auto& d : column(wmk::dimension_trajectory(w2, b1), true)) CHECK(d == Degree(2));

  // Term dimension of stratum j is 2 - floor(j/3); the tail keeps j > bound/3.
  const Representation w3(GroupSpec(3, 1), {3});
  const std::vector<std::int64_t> b2{2, 5, 8};
  CHECK(column(wmk::dimension_trajectory(w3, b2), true) == std::vector<Degree>{2, 2, 1});
  const std::vector<std::int64_t> b3{2, 8, 26, 80};
  CHECK(column(wmk::dimension_trajectory(w3, b3), true) == std::vector<Degree>{2, 1, -1, -7});

  const Representation w1(GroupSpec(2, 1), {1});
  const std::vector<std::int64_t> b4{1, 3, 5};
  CHECK(column(wmk::dimension_trajectory(w1, b4), false) == std::vector<Degree>{2, 3, 4});

  const std::vector<std::int64_t> bad{3, 3};
  CHECK_THROWS_AS(wmk::dimension_trajectory(w1, bad), wmk::DomainError);
  CHECK_THROWS_AS(wmk::dimension_trajectory(w1, std::vector<std::int64_t>{}), wmk::DomainError);
}

TEST_CASE("split identity: BOTTOM-first strata are the subgroup's truncation") {
  for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const GroupSpec spec(p, n);
    for (std::int64_t d = 1; d <= spec.order(); ++d) {
      const auto rep = Representation::indecomposable(spec, d);
      const auto full = wmk::truncated_integral(rep, 15, {true, 1});
      const auto sub = wmk::truncated_integral(wmk::restrict_to_subgroup(rep), 15, {true, 1});
      std::vector<std::pair<OrderTuple, LaurentPoly>> bottom, connected_part;
      LaurentPoly bottom_sum, connected_sum;
      for (const auto& [j, t] : full.per_stratum) {
        if (j.is_connected()) {
          connected_sum += t;
        } else {
          bottom.emplace_back(j.truncated(), t);
          bottom_sum += t;
        }
      }
      REQUIRE(bottom == sub.per_stratum);
      REQUIRE(bottom_sum == sub.partial_sum);
      REQUIRE(bottom_sum + connected_sum == full.partial_sum);
    }
  }
}

TEST_CASE("grouped fibers share one v") {
  const GroupSpec spec(2, 3);
  const Representation rep(spec, {7});
  for (std::int64_t u0 = 1; u0 <= 5; u0 += 2) {
    for (std::int64_t u1 : {2 * u0, 2 * u0 + 1, 2 * u0 + 3}) {
      for (std::int64_t u2 : {2 * u1, 2 * u1 + 1}) {
        if (u2 > 20) continue;
        const wmk::JumpSequence u(spec, {u0, u1, u2});
        LaurentPoly terms, classes;
        for (const auto& j : wmk::fiber(u)) {
          terms += wmk::term(rep, j);
          classes += wmk::stratum_class(j);
        }
        REQUIRE(terms == classes.shifted(rep.dimension() - wmk::v_jumps(rep, u)));
      }
    }
  }
}

TEST_CASE("trajectories witness the convergence status") {
  const std::vector<Representation> catalog = {
      Representation(GroupSpec(2, 1), {2}), Representation(GroupSpec(3, 1), {3}), Representation(GroupSpec(2, 1), {1}),
      Representation(GroupSpec(2, 2), {4}), Representation(GroupSpec(2, 2), {3}), Representation(GroupSpec(3, 2), {5}),
      Representation(GroupSpec(3, 2), {9}), Representation(GroupSpec(2, 2), {2, 2}),
  };
  for (const auto& rep : catalog) {
    CAPTURE(rep.to_string());
    const auto st = wmk::convergence_status(rep).status;
    const std::int64_t base = rep.spec().order();
    const std::vector<std::int64_t> bounds{base, 2 * base, 4 * base, 8 * base, 16 * base};
    const auto rows = wmk::dimension_trajectory(rep, bounds, 0);
    for (std::size_t i = 1; i < rows.size(); ++i) REQUIRE(rows[i].max_term_dim >= rows[i - 1].max_term_dim);
    switch (st) {
      case wmk::ConvergenceStatus::kStrict:
        for (std::size_t i = 3; i < rows.size(); ++i) REQUIRE(rows[i].tail_max_dim < rows[i - 1].tail_max_dim);
        break;
      case wmk::ConvergenceStatus::kBoundedBoundary:
        for (std::size_t i = 3; i < rows.size(); ++i) REQUIRE(rows[i].max_term_dim == rows[i - 1].max_term_dim);
        break;
      case wmk::ConvergenceStatus::kUnbounded:
        for (std::size_t i = 1; i < rows.size(); ++i) REQUIRE(rows[i].max_term_dim > rows[i - 1].max_term_dim);
        break;
    }
  }
}

TEST_CASE("parallel evaluation is bit-identical to serial") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const GroupSpec spec = trial % 2 ? GroupSpec(2, 3) : GroupSpec(3, 2);
    std::uniform_int_distribution<std::int64_t> dim(1, spec.order());
    const Representation rep(spec, {dim(rng), dim(rng)});
    const auto serial = wmk::truncated_integral(rep, 11, {true, 1});
    for (unsigned threads : {2u, 3u, 7u, 64u}) {
      const auto par = wmk::truncated_integral(rep, 11, {true, threads});
      REQUIRE(par.partial_sum == serial.partial_sum);
      REQUIRE(par.max_term_dim == serial.max_term_dim);
      REQUIRE(par.tail_max_dim == serial.tail_max_dim);
      REQUIRE(par.per_stratum == serial.per_stratum);
    }
  }
}

TEST_CASE("per-coordinate bounds") {
  const GroupSpec spec(2, 2);
  const Representation rep(spec, {3});
  const auto s = wmk::truncated_integral(rep, std::vector<std::int64_t>{3, 5});
  CHECK(s.term_count == 3 * 4);
  const auto cube = wmk::truncated_integral(rep, 5);
  const auto same = wmk::truncated_integral(rep, std::vector<std::int64_t>{5, 5});
  CHECK(cube.partial_sum == same.partial_sum);
}
