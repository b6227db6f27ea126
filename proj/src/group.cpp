#include "wmk/group.hpp"

#include "wmk/checked.hpp"
#include "wmk/errors.hpp"

namespace wmk {

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0) return false;
  for (std::int64_t f = 3; f <= value / f; f += 2) {
    if (value % f == 0) return false;
  }
  return true;
}

GroupSpec::GroupSpec(std::int64_t p, int n) : p_(p), n_(n), order_(1) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("n = " + std::to_string(n) + " must be at least 1");
  for (int i = 0; i < n; ++i) {
    if (order_ > kMaxOrder / p) {
      throw DomainError("group order " + std::to_string(p) + "^" + std::to_string(n) +
                        " exceeds the supported maximum 2^30");
    }
    order_ *= p;
  }
}

std::int64_t GroupSpec::power(int k) const {
  if (k < 0 || k > n_) throw DomainError("exponent out of range for p^k");
  return checked::pow(p_, k);
}

GroupSpec GroupSpec::subgroup() const {
  if (n_ == 1) throw DomainError("Z/pZ has no proper nontrivial p-power subgroup (n = 1)");
  return GroupSpec(p_, n_ - 1);
}

std::string GroupSpec::to_string() const {
  return "Z/" + std::to_string(p_) + "^" + std::to_string(n_) + "Z";
}

}  // namespace wmk
