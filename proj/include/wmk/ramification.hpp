#pragma once

// Strata of the moduli space of Z/p^nZ-covers of the formal disk, labelled by
// the pole orders (j_0, ..., j_{n-1}) of a reduced Witt vector, and the upper
// ramification jumps they determine.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wmk/grothendieck.hpp"
#include "wmk/group.hpp"

namespace wmk {

/// A pole order, or BOTTOM (std::nullopt) for a vanishing Witt component.
using OrderEntry = std::optional<std::int64_t>;
inline constexpr std::nullopt_t kBottom = std::nullopt;

class OrderTuple {
 public:
  /// Throws DomainError if the length is not n or a non-BOTTOM entry is not a
  /// positive integer prime to p.
  OrderTuple(GroupSpec spec, std::vector<OrderEntry> entries);

  const GroupSpec& spec() const { return spec_; }
  std::span<const OrderEntry> entries() const { return entries_; }
  const OrderEntry& operator[](std::size_t i) const { return entries_[i]; }

  bool is_connected() const { return entries_.front().has_value(); }
  bool is_all_bottom() const;
  /// Largest non-BOTTOM entry, if any.
  std::optional<std::int64_t> largest_entry() const;
  /// (j_1, ..., j_{n-1}) over the index-p subgroup.
  OrderTuple truncated() const;

  /// "1,3" or "_,1"
  std::string to_string() const;

  friend bool operator==(const OrderTuple& a, const OrderTuple& b) { return a.entries_ == b.entries_ && a.spec_ == b.spec_; }
  /// Lexicographic, BOTTOM below every integer.
  friend std::strong_ordering operator<=>(const OrderTuple& a, const OrderTuple& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  GroupSpec spec_;
  std::vector<OrderEntry> entries_;
};

/// True iff u is strictly increasing, positive, p does not divide u_0, and
/// each u_i is either p*u_{i-1} or both exceeds p*u_{i-1} and is prime to p.
bool is_admissible(std::int64_t p, std::span<const std::int64_t> u);

/// An admissible sequence of upper ramification jumps.
class JumpSequence {
 public:
  /// Throws DomainError if the length is not n or the sequence is inadmissible.
  JumpSequence(GroupSpec spec, std::vector<std::int64_t> entries);

  const GroupSpec& spec() const { return spec_; }
  std::span<const std::int64_t> entries() const { return entries_; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::string to_string() const;

  friend bool operator==(const JumpSequence&, const JumpSequence&) = default;

 private:
  GroupSpec spec_;
  std::vector<std::int64_t> entries_;
};

struct LowerJumps {
  std::vector<std::int64_t> entries;
  friend bool operator==(const LowerJumps&, const LowerJumps&) = default;
};

/// u_m = max{ p^{m-i} j_i : 0 <= i <= m, j_i != BOTTOM }.
/// Throws NotConnectedError when j_0 is BOTTOM.
JumpSequence upper_jumps(const OrderTuple& j);

/// All connected order tuples whose upper jumps equal u. The fiber is a
/// product: j_0 = u_0; j_m = u_m when u_m > p u_{m-1}; otherwise j_m is BOTTOM
/// or any v < u_m prime to p.
std::vector<OrderTuple> fiber(const JumpSequence& u);

/// l_0 = t_0, l_i = l_{i-1} + (t_i - t_{i-1}) p^i, for any integer tuple t.
std::vector<std::int64_t> telescope(std::int64_t p, std::span<const std::int64_t> t);
LowerJumps lower_jumps(const JumpSequence& u);

/// prod over non-BOTTOM entries of (L - 1) L^{j - 1 - floor(j/p)}.
LaurentPoly stratum_class(const OrderTuple& j);

/// The finite grid of order tuples whose entries stay below per-coordinate
/// bounds, in lexicographic order with BOTTOM first. Tuples are addressable by
/// index so the grid can be split across workers.
class OrderTupleGrid {
 public:
  OrderTupleGrid(GroupSpec spec, std::int64_t bound);
  OrderTupleGrid(GroupSpec spec, std::vector<std::int64_t> bounds);

  const GroupSpec& spec() const { return spec_; }
  std::span<const std::int64_t> bounds() const { return bounds_; }
  /// prod over coordinates of (1 + b - floor(b/p)).
  std::uint64_t size() const { return size_; }
  OrderTuple at(std::uint64_t index) const;

  void for_each(const std::function<void(const OrderTuple&)>& fn) const;

 private:
  GroupSpec spec_;
  std::vector<std::int64_t> bounds_;
  std::vector<std::vector<OrderEntry>> values_;  // per coordinate, BOTTOM first
  std::uint64_t size_ = 1;
};

std::vector<OrderTuple> enumerate_order_tuples(const GroupSpec& spec, std::int64_t bound);

}  // namespace wmk
