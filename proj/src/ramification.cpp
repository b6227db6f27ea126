#include "wmk/ramification.hpp"

#include <algorithm>
#include <limits>

#include "wmk/checked.hpp"
#include "wmk/errors.hpp"

namespace wmk {

OrderTuple::OrderTuple(GroupSpec spec, std::vector<OrderEntry> entries)
    : spec_(spec), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != spec_.n()) {
    throw DomainError("order tuple has " + std::to_string(entries_.size()) + " entries, expected n = " +
                      std::to_string(spec_.n()));
  }
  for (const auto& e : entries_) {
    if (!e) continue;
    if (*e <= 0 || *e % spec_.p() == 0) {
      throw DomainError("order entry " + std::to_string(*e) + " must be a positive integer prime to p = " +
                        std::to_string(spec_.p()));
    }
  }
}

bool OrderTuple::is_all_bottom() const {
  return std::none_of(entries_.begin(), entries_.end(), [](const OrderEntry& e) { return e.has_value(); });
}

std::optional<std::int64_t> OrderTuple::largest_entry() const {
  std::optional<std::int64_t> best;
  for (const auto& e : entries_) {
    if (e && (!best || *e > *best)) best = e;
  }
  return best;
}

OrderTuple OrderTuple::truncated() const {
  return OrderTuple(spec_.subgroup(), std::vector<OrderEntry>(entries_.begin() + 1, entries_.end()));
}

std::string OrderTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i] ? std::to_string(*entries_[i]) : "_";
  }
  return out;
}

bool is_admissible(std::int64_t p, std::span<const std::int64_t> u) {
  if (u.empty() || u[0] <= 0 || u[0] % p == 0) return false;
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] <= u[i - 1]) return false;
    std::int64_t prev;
    if (__builtin_mul_overflow(p, u[i - 1], &prev)) return false;
    if (u[i] == prev) continue;
    if (u[i] > prev && u[i] % p != 0) continue;
    return false;
  }
  return true;
}

JumpSequence::JumpSequence(GroupSpec spec, std::vector<std::int64_t> entries)
    : spec_(spec), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != spec_.n()) {
    throw DomainError("jump sequence has " + std::to_string(entries_.size()) + " entries, expected n = " +
                      std::to_string(spec_.n()));
  }
  if (!is_admissible(spec_.p(), entries_)) {
    throw DomainError("jump sequence (" + to_string() + ") is not admissible for p = " +
                      std::to_string(spec_.p()));
  }
}

std::string JumpSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out;
}

JumpSequence upper_jumps(const OrderTuple& j) {
  if (!j.is_connected()) throw NotConnectedError("order tuple (" + j.to_string() + ") has j_0 = BOTTOM");
  const std::int64_t p = j.spec().p();
  std::vector<std::int64_t> u;
  u.reserve(j.entries().size());
  for (std::size_t m = 0; m < j.entries().size(); ++m) {
    // max over i <= m of p^{m-i} j_i is max(p * u_{m-1}, j_m).
    std::int64_t best = m == 0 ? 0 : checked::mul(p, u.back());
    if (j[m]) best = std::max(best, *j[m]);
    u.push_back(best);
  }
  return JumpSequence(j.spec(), std::move(u));
}

std::vector<OrderTuple> fiber(const JumpSequence& u) {
  const GroupSpec& spec = u.spec();
  const std::int64_t p = spec.p();
  std::vector<std::vector<OrderEntry>> choices(spec.n());
  choices[0] = {u[0]};
  for (int m = 1; m < spec.n(); ++m) {
    if (u[m] == p * u[m - 1]) {
      choices[m].push_back(kBottom);
      for (std::int64_t v = 1; v < u[m]; ++v) {
        if (v % p != 0) choices[m].push_back(v);
      }
    } else {
      choices[m] = {u[m]};
    }
  }
  std::vector<OrderTuple> out;
  std::vector<std::size_t> idx(spec.n(), 0);
  while (true) {
    std::vector<OrderEntry> entries(spec.n());
    for (int m = 0; m < spec.n(); ++m) entries[m] = choices[m][idx[m]];
    out.emplace_back(spec, std::move(entries));
    int k = spec.n() - 1;
    while (k >= 0 && ++idx[k] == choices[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::vector<std::int64_t> telescope(std::int64_t p, std::span<const std::int64_t> t) {
  std::vector<std::int64_t> l;
  l.reserve(t.size());
  std::int64_t place = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == 0) {
      l.push_back(t[0]);
      continue;
    }
    place = checked::mul(place, p);
    l.push_back(checked::add(l.back(), checked::mul(checked::sub(t[i], t[i - 1]), place)));
  }
  return l;
}

LowerJumps lower_jumps(const JumpSequence& u) { return {telescope(u.spec().p(), u.entries())}; }

LaurentPoly stratum_class(const OrderTuple& j) {
  const std::int64_t p = j.spec().p();
  LaurentPoly out(1);
  for (const auto& e : j.entries()) {
    if (!e) continue;
    out = out * LaurentPoly::gm().shifted(*e - 1 - *e / p);
  }
  return out;
}

OrderTupleGrid::OrderTupleGrid(GroupSpec spec, std::int64_t bound)
    : OrderTupleGrid(spec, std::vector<std::int64_t>(spec.n(), bound)) {}

OrderTupleGrid::OrderTupleGrid(GroupSpec spec, std::vector<std::int64_t> bounds)
    : spec_(spec), bounds_(std::move(bounds)) {
  if (static_cast<int>(bounds_.size()) != spec_.n()) {
    throw DomainError("bound vector has " + std::to_string(bounds_.size()) + " entries, expected n = " +
                      std::to_string(spec_.n()));
  }
  for (std::int64_t b : bounds_) {
    if (b < 0) throw DomainError("truncation bound must be non-negative");
    std::vector<OrderEntry> vals{kBottom};
    for (std::int64_t v = 1; v <= b; ++v) {
      if (v % spec_.p() != 0) vals.push_back(v);
    }
    if (size_ > std::numeric_limits<std::uint64_t>::max() / vals.size()) {
      throw OverflowError("order tuple grid too large");
    }
    size_ *= vals.size();
    values_.push_back(std::move(vals));
  }
}

OrderTuple OrderTupleGrid::at(std::uint64_t index) const {
  if (index >= size_) throw DomainError("order tuple grid index out of range");
  std::vector<OrderEntry> entries(values_.size());
  for (std::size_t k = values_.size(); k-- > 0;) {
    entries[k] = values_[k][index % values_[k].size()];
    index /= values_[k].size();
  }
  return OrderTuple(spec_, std::move(entries));
}

void OrderTupleGrid::for_each(const std::function<void(const OrderTuple&)>& fn) const {
  for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
}

std::vector<OrderTuple> enumerate_order_tuples(const GroupSpec& spec, std::int64_t bound) {
  OrderTupleGrid grid(spec, bound);
  std::vector<OrderTuple> out;
  out.reserve(grid.size());
  grid.for_each([&](const OrderTuple& j) { out.push_back(j); });
  return out;
}

}  // namespace wmk
