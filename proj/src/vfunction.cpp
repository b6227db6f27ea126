#include "wmk/vfunction.hpp"

#include <vector>

#include "wmk/checked.hpp"
#include "wmk/errors.hpp"

namespace wmk {

VValue v_formula(const Representation& rep, std::span<const std::int64_t> t) {
  const GroupSpec& spec = rep.spec();
  const int n = spec.n();
  const std::int64_t p = spec.p();
  if (static_cast<int>(t.size()) != n) {
    throw DomainError("tuple has " + std::to_string(t.size()) + " entries, expected n = " + std::to_string(n));
  }
  for (std::int64_t x : t) {
    if (x <= 0) throw DomainError("tuple entries must be positive, got " + std::to_string(x));
  }
  const auto l = telescope(p, t);
  std::vector<std::int64_t> weight(n);
  for (int m = 0; m < n; ++m) weight[m] = checked::mul(spec.power(n - 1 - m), l[m]);

  VValue total = 0;
  for (std::int64_t dim : rep.summands()) {
    // Odometer over the base-p digits of e = 0..dim-1, tracking the numerator.
    std::vector<std::int64_t> digit(n, 0);
    std::int64_t numerator = 0;
    for (std::int64_t e = 0; e < dim; ++e) {
      total = checked::add(total, checked::ceil_div(numerator, spec.order()));
      for (int m = 0; m < n; ++m) {
        if (++digit[m] < p) {
          numerator = checked::add(numerator, weight[m]);
          break;
        }
        digit[m] = 0;
        numerator = checked::sub(numerator, checked::mul(p - 1, weight[m]));
      }
    }
  }
  return total;
}

VValue v_jumps(const Representation& rep, const JumpSequence& u) {
  if (!(u.spec() == rep.spec())) throw DomainError("jump sequence and representation use different groups");
  return v_formula(rep, u.entries());
}

VValue v_stratum(const Representation& rep, const OrderTuple& j) {
  if (!(j.spec() == rep.spec())) throw DomainError("order tuple and representation use different groups");
  if (j.is_all_bottom()) return 0;
  if (j.is_connected()) return v_jumps(rep, upper_jumps(j));
  // The connected component is a cover for the index-p subgroup.
  return v_stratum(restrict_to_subgroup(rep), j.truncated());
}

bool check_decomposition(const Representation& rep, std::span<const std::int64_t> r,
                         std::span<const std::int64_t> q) {
  const GroupSpec& spec = rep.spec();
  if (static_cast<int>(q.size()) != spec.n()) throw DomainError("q must have n entries");
  std::vector<std::int64_t> shifted(r.begin(), r.end());
  if (shifted.size() != q.size()) throw DomainError("r must have n entries");
  VValue expected = v_formula(rep, r);
  for (int m = 0; m < spec.n(); ++m) {
    if (q[m] < 0) throw DomainError("q entries must be non-negative");
    shifted[m] = checked::add(shifted[m], checked::mul(spec.order(), q[m]));
    expected = checked::add(expected, checked::mul(invariant_D(rep, m), q[m]));
  }
  return v_formula(rep, shifted) == expected;
}

}  // namespace wmk
