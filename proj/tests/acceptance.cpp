// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wmk/convergence.hpp"
#include "wmk/digits.hpp"
#include "wmk/errors.hpp"
#include "wmk/ramification.hpp"
#include "wmk/representation.hpp"
#include "wmk/series.hpp"
#include "wmk/vfunction.hpp"

using namespace wmk;

namespace {

using Pairs = std::vector<std::pair<std::int64_t, int>>;
const Pairs kSweep = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}};

struct Outcome {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

std::string rep_text(const Representation& rep) { return rep.to_string(); }

Outcome digit_sums() {
  Outcome out;
  for (auto [p, n] : kSweep) {
    const GroupSpec spec(p, n);
    for (std::int64_t d = 1; d <= spec.order(); ++d)
      for (int m = 0; m < n; ++m)
        out.expect(digit_sum(d, spec, m) == digit_sum_bruteforce(d, spec, m),
                   "p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                       ",m=" + std::to_string(m));
  }
  return out;
}

Outcome d_invariants() {
  Outcome out;
  for (auto [p, n] : kSweep) {
    const GroupSpec spec(p, n);
    for (std::int64_t d = 1; d <= spec.order(); ++d) {
      const auto v = Representation::indecomposable(spec, d);
      const auto w = restrict_to_subgroup(v);
      for (int m = 0; m < n; ++m) {
        out.expect(invariant_D(v, m) == invariant_D_oracle(v, m), rep_text(v) + " oracle m=" + std::to_string(m));
        if (m >= 1)
          out.expect(invariant_D(v, m) == p * invariant_D(w, m - 1), rep_text(v) + " recursion m=" + std::to_string(m));
      }
    }
  }
  return out;
}

Outcome decomposition() {
  Outcome out;
  std::mt19937_64 rng(31337);
  for (auto [p, n] : kSweep) {
    const GroupSpec spec(p, n);
    const std::int64_t hi = spec.order() * p;
    std::uniform_int_distribution<std::int64_t> entry(1, hi), shift(0, hi), dim(1, spec.order());
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> dims(count(rng)), r(n), q(n);
      for (auto& x : dims) x = dim(rng);
      for (auto& x : r) x = entry(rng);
      for (auto& x : q) x = shift(rng);
      const Representation rep(spec, dims);
      out.expect(check_decomposition(rep, r, q), rep_text(rep));
    }
  }
  return out;
}

std::vector<std::int64_t> jumps_of(const OrderTuple& j) {
  const auto u = upper_jumps(j);
  return {u.entries().begin(), u.entries().end()};
}

void each_increasing(std::int64_t p, int n, std::int64_t limit,
                     const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> cur(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (is_admissible(p, cur)) fn(cur);
      return;
    }
    for (std::int64_t x = i == 0 ? 1 : cur[i - 1] + 1; x <= limit; ++x) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

Outcome partition() {
  Outcome out;
  const std::int64_t limit = 30;
  for (auto [p, n] : Pairs{{2, 2}, {2, 3}, {3, 2}}) {
    const GroupSpec spec(p, n);
    std::map<std::vector<std::int64_t>, std::set<OrderTuple>> by_jumps;
    std::uint64_t connected = 0;
    OrderTupleGrid(spec, limit).for_each([&](const OrderTuple& j) {
      if (!j.is_connected()) return;
      ++connected;
      const auto u = jumps_of(j);
      out.expect(is_admissible(p, u), j.to_string() + " jumps not admissible");
      by_jumps[u].insert(j);
    });
    std::set<OrderTuple> seen;
    std::uint64_t covered = 0;
    for (const auto& [u, members] : by_jumps) {
      std::set<OrderTuple> within;
      for (const auto& j : fiber(JumpSequence(spec, u))) {
        out.expect(seen.insert(j).second, j.to_string() + " in two fibers");
        out.expect(jumps_of(j) == u, j.to_string() + " has foreign jumps");
        if (*j.largest_entry() <= limit) within.insert(j);
      }
      out.expect(within == members, "fiber mismatch");
      covered += within.size();
    }
    out.expect(covered == connected, "fibers do not cover the connected tuples");

    each_increasing(p, n, 60, [&](const std::vector<std::int64_t>& u) {
      LaurentPoly total;
      for (const auto& j : fiber(JumpSequence(spec, u))) total += stratum_class(j);
      std::int64_t expected = 0;
      for (auto x : u) expected += x - x / p;
      out.expect(total.degree() == Degree(expected), "class degree");
    });
  }
  return out;
}

Outcome boundary_constants() {
  Outcome out;
  for (auto [p, n] : Pairs{{3, 2}, {2, 3}, {3, 3}, {5, 2}}) {
    const GroupSpec spec(p, n);
    const std::int64_t top = spec.power(n - 1);
    const std::string tag = "p=" + std::to_string(p) + ",n=" + std::to_string(n);

    const auto lc = Representation::indecomposable(spec, p - 1 + top);
    out.expect(digit_sum(p - 1 + top, spec, n - 1) == p - 1, tag + " S at log canonical boundary");
    out.expect(criterion_values(lc).back().is_zero(), tag + " c_{n-1} at log canonical boundary");

    const auto can = Representation::indecomposable(spec, p + top);
    out.expect(digit_sum(p + top, spec, n - 1) == p, tag + " S at canonical boundary");
    out.expect(invariant_D(can, n - 1) == spec.order(), tag + " D at canonical boundary");
    for (const auto& c : criterion_values(can)) out.expect(c.sign() < 0, tag + " c_m < 0 at canonical boundary");
  }
  return out;
}

Outcome threshold_equivalence() {
  Outcome out;
  for (auto [p, n] : Pairs{{2, 3}, {3, 3}, {2, 4}}) {
    const GroupSpec spec(p, n);
    const std::int64_t top = spec.power(n - 1);
    for (std::int64_t d = top + 2; d <= spec.order(); ++d) {
      const auto c = criterion_values(Representation::indecomposable(spec, d));
      bool nonpositive = true, negative = true;
      for (const auto& x : c) {
        nonpositive = nonpositive && x.sign() <= 0;
        negative = negative && x.sign() < 0;
      }
      const std::string tag = "p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",d=" + std::to_string(d);
      out.expect(nonpositive == (d >= p - 1 + top), tag + " log canonical threshold");
      if (d >= p + top) out.expect(negative, tag + " canonical threshold");
    }
  }
  return out;
}

Outcome series_values() {
  Outcome out;
  const auto L = [](std::int64_t e) { return LaurentPoly::power_of_L(e); };

  const Representation w2(GroupSpec(2, 1), {2});
  const auto a = truncated_integral(w2, 5);
  out.expect(a.partial_sum == L(2) + LaurentPoly(3) * (L(2) - L(1)), "p=2 {2} partial sum");
  out.expect(convergence_status(w2).status == ConvergenceStatus::kBoundedBoundary, "p=2 {2} status");
  std::vector<std::int64_t> all;
  for (std::int64_t b = 1; b <= 99; ++b) all.push_back(b);
  for (const auto& row : dimension_trajectory(w2, all, 0))
    out.expect(row.max_term_dim == Degree(2), "p=2 {2} max_term_dim at bound " + std::to_string(row.bound));

  const Representation w3(GroupSpec(3, 1), {3});
  const auto b = truncated_integral(w3, 8);
  out.expect(b.partial_sum == L(3) + LaurentPoly(2) * L(2) - LaurentPoly(2) * L(-1), "p=3 {3} partial sum");
  out.expect(convergence_status(w3).status == ConvergenceStatus::kStrict, "p=3 {3} status");
  const auto tail = dimension_trajectory(w3, std::vector<std::int64_t>{2, 8, 26, 80});
  for (std::size_t i = 1; i < tail.size(); ++i)
    out.expect(tail[i].tail_max_dim < tail[i - 1].tail_max_dim, "p=3 {3} tail not decreasing");

  const Representation w1(GroupSpec(2, 1), {1});
  out.expect(convergence_status(w1).status == ConvergenceStatus::kUnbounded, "p=2 {1} status");
  std::vector<std::int64_t> steps;  // one jump per odd order
  for (std::int64_t b = 1; b <= 99; b += 2) steps.push_back(b);
  const auto grow = dimension_trajectory(w1, steps, 0);
  for (std::size_t i = 1; i < grow.size(); ++i)
    out.expect(grow[i].max_term_dim.value() == grow[i - 1].max_term_dim.value() + 1,
               "p=2 {1} growth at bound " + std::to_string(grow[i].bound));
  return out;
}

Outcome split_identity() {
  Outcome out;
  const SeriesOptions opts{true, 0};
  for (auto [p, n] : Pairs{{2, 2}, {2, 3}, {3, 2}}) {
    const GroupSpec spec(p, n);
    for (std::int64_t d = 1; d <= spec.order(); ++d) {
      const auto rep = Representation::indecomposable(spec, d);
      const auto full = truncated_integral(rep, 15, opts);
      const auto sub = truncated_integral(restrict_to_subgroup(rep), 15, opts);
      std::vector<std::pair<OrderTuple, LaurentPoly>> bottom;
      LaurentPoly total;
      for (const auto& [j, t] : full.per_stratum) {
        if (j.is_connected()) continue;
        bottom.emplace_back(j.truncated(), t);
        total += t;
      }
      out.expect(bottom == sub.per_stratum, rep_text(rep) + " term-for-term");
      out.expect(total == sub.partial_sum, rep_text(rep) + " sum");
    }
  }
  return out;
}

Outcome determinism() {
  Outcome out;
  std::mt19937_64 rng(97);
  const Pairs shapes = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}};
  std::uniform_int_distribution<std::size_t> shape(0, shapes.size() - 1);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<unsigned> workers(2, 8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [p, n] = shapes[shape(rng)];
    const GroupSpec spec(p, n);
    std::uniform_int_distribution<std::int64_t> dim(1, spec.order()), bound(4, n >= 4 ? 9 : 14);
    std::vector<std::int64_t> dims(count(rng));
    for (auto& x : dims) x = dim(rng);
    const Representation rep(spec, dims);
    const std::int64_t b = bound(rng);
    const unsigned threads = workers(rng);
    const auto serial = truncated_integral(rep, b, {true, 1});
    const auto parallel = truncated_integral(rep, b, {true, threads});
    const bool same = serial.partial_sum == parallel.partial_sum && serial.term_count == parallel.term_count &&
                      serial.max_term_dim == parallel.max_term_dim &&
                      serial.tail_max_dim == parallel.tail_max_dim && serial.per_stratum == parallel.per_stratum &&
                      serial.partial_sum.to_string() == parallel.partial_sum.to_string();
    out.expect(same, rep_text(rep) + " bound " + std::to_string(b) + " threads " + std::to_string(threads));
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"digit-sum oracle", digit_sums},
      {"D-invariant double check", d_invariants},
      {"decomposition lemma", decomposition},
      {"stratum/fiber partition", partition},
      {"boundary constants", boundary_constants},
      {"threshold equivalence", threshold_equivalence},
      {"series concrete values", series_values},
      {"split identity", split_identity},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failures = 1;
      o.first_failure = std::string("exception: ") + e.what();
    }
    if (o.failures) {
      ++failed;
      std::printf("FAIL %zu %s: %llu of %llu checks failed, first: %s\n", i + 1, criteria[i].first,
                  static_cast<unsigned long long>(o.failures), static_cast<unsigned long long>(o.checks),
                  o.first_failure.c_str());
    } else {
      std::printf("PASS %zu %s (%llu checks)\n", i + 1, criteria[i].first, static_cast<unsigned long long>(o.checks));
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
