#include "wmk/digits.hpp"

#include <string>

#include "wmk/checked.hpp"
#include "wmk/errors.hpp"

namespace wmk {

namespace {

void check_args(std::int64_t d, const GroupSpec& spec, int m) {
  if (d < 1 || d > spec.order()) {
    throw DomainError("d = " + std::to_string(d) + " outside [1, p^n = " +
                      std::to_string(spec.order()) + "]");
  }
  if (m < 0 || m >= spec.n()) {
    throw DomainError("digit index m = " + std::to_string(m) + " outside [0, n-1]");
  }
}

std::int64_t s0(std::int64_t d, std::int64_t p) {
  std::int64_t q = d / p;
  std::int64_t r = d % p;
  return checked::add(checked::mul(q, p * (p - 1) / 2), r * (r - 1) / 2);
}

std::int64_t recurse(std::int64_t d, std::int64_t p, int m) {
  if (m == 0) return s0(d, p);
  std::int64_t d0 = d % p;
  std::int64_t q = d / p;
  // When d0 > 0 the number is below p^n, so its m-th digit is an ordinary one.
  std::int64_t dm = d0 == 0 ? 0 : (q / checked::pow(p, m - 1)) % p;
  return checked::add(checked::mul(p, recurse(q, p, m - 1)), d0 * dm);
}

}  // namespace

std::int64_t DigitVector::value() const {
  std::int64_t v = 0;
  std::int64_t place = 1;
  for (std::int64_t digit : digits) {
    v = checked::add(v, checked::mul(digit, place));
    place = checked::mul(place, base);
  }
  return v;
}

DigitVector base_p_digits(std::int64_t d, const GroupSpec& spec) {
  if (d < 1 || d > spec.order()) {
    throw DomainError("d = " + std::to_string(d) + " outside [1, p^n = " +
                      std::to_string(spec.order()) + "]");
  }
  DigitVector out{spec.p(), {}};
  out.digits.reserve(spec.n());
  std::int64_t rest = d;
  for (int m = 0; m + 1 < spec.n(); ++m) {
    out.digits.push_back(rest % spec.p());
    rest /= spec.p();
  }
  out.digits.push_back(rest);
  return out;
}

std::int64_t digit_sum_bruteforce(std::int64_t d, const GroupSpec& spec, int m) {
  check_args(d, spec, m);
  const std::int64_t place = spec.power(m);
  std::int64_t total = 0;
  for (std::int64_t e = 0; e < d; ++e) total += (e / place) % spec.p();
  return total;
}

std::int64_t digit_sum(std::int64_t d, const GroupSpec& spec, int m) {
  check_args(d, spec, m);
  return recurse(d, spec.p(), m);
}

std::int64_t digit_sum_closed_form(std::int64_t d, const GroupSpec& spec, int m) {
  check_args(d, spec, m);
  const std::int64_t p = spec.p();
  if (m == 0) return s0(d, p);
  const auto dv = base_p_digits(d, spec);
  const std::int64_t dm = dv.digits[m];
  const std::int64_t head = d / spec.power(m);  // d_m + d_{m+1} p + ...
  std::int64_t total = head == 0 ? 0 : checked::mul(spec.power(m), s0(head, p));
  for (int l = 0; l < m; ++l) {
    total = checked::add(total, checked::mul(spec.power(l), dv.digits[l] * dm));
  }
  return total;
}

std::vector<std::int64_t> digit_sums(std::int64_t d, const GroupSpec& spec) {
  std::vector<std::int64_t> out;
  out.reserve(spec.n());
  for (int m = 0; m < spec.n(); ++m) out.push_back(digit_sum(d, spec, m));
  return out;
}

}  // namespace wmk
