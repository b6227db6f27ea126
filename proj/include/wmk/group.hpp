#pragma once

#include <cstdint>
#include <string>

namespace wmk {

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t value);

/// The cyclic group Z/p^nZ, fixed by a prime p and an exponent n >= 1.
class GroupSpec {
 public:
  /// Largest admitted group order p^n.
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 30;

  /// Throws DomainError unless p is prime, n >= 1 and p^n <= kMaxOrder.
  GroupSpec(std::int64_t p, int n);

  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  /// p^n
  std::int64_t order() const { return order_; }
  /// p^k for 0 <= k <= n.
  std::int64_t power(int k) const;

  /// The index-p subgroup Z/p^{n-1}Z. Throws DomainError when n == 1.
  GroupSpec subgroup() const;

  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::int64_t p_;
  int n_;
  std::int64_t order_;
};

}  // namespace wmk
