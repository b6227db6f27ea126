#pragma once

// Truncations of the integral of L^{d-v} over all Z/p^nZ-covers, summed
// stratum by stratum over a box of order tuples.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wmk/grothendieck.hpp"
#include "wmk/ramification.hpp"
#include "wmk/representation.hpp"

namespace wmk {

/// [stratum] * L^{d - v(stratum)}
LaurentPoly term(const Representation& rep, const OrderTuple& j);

struct SeriesOptions {
  bool per_stratum = false;
  /// Worker count; 0 means default_thread_count().
  unsigned threads = 1;
};

/// Worker cap from WMK_THREADS, else the hardware concurrency (at least 1).
unsigned default_thread_count();

struct SeriesTruncation {
  std::vector<std::int64_t> bounds;  // per coordinate
  LaurentPoly partial_sum;
  std::uint64_t term_count = 0;
  /// Max over individual stratum terms of their degree.
  Degree max_term_dim = kNegInfinity;
  /// Same max restricted to strata with some entry j_i satisfying p * j_i > bound_i.
  Degree tail_max_dim = kNegInfinity;
  std::vector<std::pair<OrderTuple, LaurentPoly>> per_stratum;
};

/// Sum of term(rep, j) over every order tuple with entries <= bound. The result
/// does not depend on the worker count.
SeriesTruncation truncated_integral(const Representation& rep, std::int64_t bound, SeriesOptions options = {});
SeriesTruncation truncated_integral(const Representation& rep, std::vector<std::int64_t> bounds,
                                    SeriesOptions options = {});

struct TrajectoryRow {
  std::int64_t bound = 0;
  std::uint64_t num_strata = 0;
  Degree max_term_dim = kNegInfinity;
  Degree tail_max_dim = kNegInfinity;
  LaurentPoly partial_sum;
};

/// One truncation per bound. Throws DomainError unless bounds are non-empty
/// and strictly increasing.
std::vector<TrajectoryRow> dimension_trajectory(const Representation& rep, std::span<const std::int64_t> bounds,
                                                unsigned threads = 1);

}  // namespace wmk
