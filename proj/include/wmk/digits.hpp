#pragma once

// Base-p digits and the digit sums S_d^(m): the sum of the m-th base-p
// digits of 0, 1, ..., d-1.

#include <cstdint>
#include <vector>

#include "wmk/group.hpp"

namespace wmk {

/// Digits d_0..d_{n-1} of some 1 <= d <= p^n. The top digit may equal p
/// (only for d = p^n); every other digit is below p.
struct DigitVector {
  std::int64_t base = 0;
  std::vector<std::int64_t> digits;

  std::int64_t value() const;
  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

DigitVector base_p_digits(std::int64_t d, const GroupSpec& spec);

/// Literal enumeration over e = 0..d-1.
std::int64_t digit_sum_bruteforce(std::int64_t d, const GroupSpec& spec, int m);

/// S_d^(m) = p * S_q^(m-1) + d_0 * d_m with q = (d - d_0) / p, grounded at the
/// m = 0 closed form q * p(p-1)/2 + d_0(d_0-1)/2.
std::int64_t digit_sum(std::int64_t d, const GroupSpec& spec, int m);

/// Non-recursive form: p^m * S^(0)_{d_m + d_{m+1} p + ...} + sum_{l<m} p^l d_l d_m.
std::int64_t digit_sum_closed_form(std::int64_t d, const GroupSpec& spec, int m);

/// S_d^(0..n-1) in one call.
std::vector<std::int64_t> digit_sums(std::int64_t d, const GroupSpec& spec);

}  // namespace wmk
