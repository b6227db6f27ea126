#include "wmk/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "wmk/checked.hpp"
#include "wmk/errors.hpp"
#include "wmk/vfunction.hpp"

namespace wmk {

namespace {

struct Chunk {
  LaurentPoly sum;
  Degree max_dim = kNegInfinity;
  Degree tail_dim = kNegInfinity;
  std::vector<std::pair<OrderTuple, LaurentPoly>> strata;
};

bool in_tail(const OrderTuple& j, std::span<const std::int64_t> bounds) {
  const std::int64_t p = j.spec().p();
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (j[i] && checked::mul(p, *j[i]) > bounds[i]) return true;
  }
  return false;
}

Chunk evaluate_range(const Representation& rep, const OrderTupleGrid& grid, std::uint64_t begin,
                     std::uint64_t end, bool keep_strata) {
  Chunk c;
  for (std::uint64_t i = begin; i < end; ++i) {
    OrderTuple j = grid.at(i);
    LaurentPoly t = term(rep, j);
    const Degree dim = t.degree();
    c.max_dim = std::max(c.max_dim, dim);
    if (in_tail(j, grid.bounds())) c.tail_dim = std::max(c.tail_dim, dim);
    c.sum += t;
    if (keep_strata) c.strata.emplace_back(std::move(j), std::move(t));
  }
  return c;
}

}  // namespace

LaurentPoly term(const Representation& rep, const OrderTuple& j) {
  const VValue v = v_stratum(rep, j);
  return stratum_class(j).shifted(checked::sub(rep.dimension(), v));
}

unsigned default_thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WMK_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) return static_cast<unsigned>(std::min<long>(cap, 1024));
    } catch (const std::exception&) {
      // Unparseable values fall back to the hardware count.
    }
  }
  return hw;
}

SeriesTruncation truncated_integral(const Representation& rep, std::int64_t bound, SeriesOptions options) {
  return truncated_integral(rep, std::vector<std::int64_t>(rep.spec().n(), bound), options);
}

SeriesTruncation truncated_integral(const Representation& rep, std::vector<std::int64_t> bounds,
                                    SeriesOptions options) {
  const OrderTupleGrid grid(rep.spec(), std::move(bounds));
  const std::uint64_t total = grid.size();
  unsigned workers = options.threads == 0 ? default_thread_count() : options.threads;
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total)));

  std::vector<Chunk> chunks(workers);
  if (workers == 1) {
    chunks[0] = evaluate_range(rep, grid, 0, total, options.per_stratum);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        chunks[w] = evaluate_range(rep, grid, begin, end, options.per_stratum);
      });
    }
  }  // jthreads join here

  SeriesTruncation out;
  out.bounds.assign(grid.bounds().begin(), grid.bounds().end());
  out.term_count = total;
  for (auto& c : chunks) {
    out.partial_sum += c.sum;
    out.max_term_dim = std::max(out.max_term_dim, c.max_dim);
    out.tail_max_dim = std::max(out.tail_max_dim, c.tail_dim);
    std::move(c.strata.begin(), c.strata.end(), std::back_inserter(out.per_stratum));
  }
  return out;
}

std::vector<TrajectoryRow> dimension_trajectory(const Representation& rep, std::span<const std::int64_t> bounds,
                                                unsigned threads) {
  if (bounds.empty()) throw DomainError("trajectory needs at least one bound");
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    if (bounds[i] <= bounds[i - 1]) throw DomainError("trajectory bounds must be strictly increasing");
  }
  std::vector<TrajectoryRow> rows;
  rows.reserve(bounds.size());
  for (std::int64_t b : bounds) {
    auto s = truncated_integral(rep, b, SeriesOptions{false, threads});
    rows.push_back({b, s.term_count, s.max_term_dim, s.tail_max_dim, std::move(s.partial_sum)});
  }
  return rows;
}

}  // namespace wmk
