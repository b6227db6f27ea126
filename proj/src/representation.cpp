#include "wmk/representation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wmk/checked.hpp"
#include "wmk/digits.hpp"
#include "wmk/errors.hpp"
#include "wmk/vfunction.hpp"

namespace wmk {

Representation::Representation(GroupSpec spec, std::vector<std::int64_t> summands)
    : spec_(spec), summands_(std::move(summands)) {
  if (summands_.empty()) throw DomainError("a representation needs at least one summand");
  for (std::int64_t e : summands_) {
    if (e < 1 || e > spec_.order()) {
      throw DomainError("summand dimension " + std::to_string(e) + " outside [1, p^n = " +
                        std::to_string(spec_.order()) + "]");
    }
    dimension_ = checked::add(dimension_, e);
  }
  std::sort(summands_.begin(), summands_.end(), std::greater<>());
}

Representation Representation::indecomposable(GroupSpec spec, std::int64_t dimension) {
  return Representation(spec, {dimension});
}

Representation Representation::direct_sum(const Representation& other) const {
  if (!(spec_ == other.spec_)) throw DomainError("direct sum of representations of different groups");
  std::vector<std::int64_t> all = summands_;
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return Representation(spec_, std::move(all));
}

std::string Representation::to_string() const {
  std::string out = "p=" + std::to_string(spec_.p()) + ",n=" + std::to_string(spec_.n()) + ",dims=";
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(summands_[i]);
  }
  return out;
}

bool is_effective(const Representation& rep) {
  const std::int64_t sub_order = rep.spec().power(rep.spec().n() - 1);
  return std::any_of(rep.summands().begin(), rep.summands().end(),
                     [&](std::int64_t e) { return e > sub_order; });
}

bool has_pseudo_reflection(const Representation& rep) {
  for (int a = 0; a < rep.spec().n(); ++a) {
    const std::int64_t step = rep.spec().power(a);
    std::int64_t codim = 0;
    for (std::int64_t e : rep.summands()) codim += std::max<std::int64_t>(e - step, 0);
    if (codim == 1) return true;
  }
  return false;
}

Representation restrict_to_subgroup(const Representation& rep) {
  const GroupSpec sub = rep.spec().subgroup();
  const std::int64_t p = rep.spec().p();
  std::vector<std::int64_t> out;
  for (std::int64_t e : rep.summands()) {
    const std::int64_t q = e / p;
    const std::int64_t r = e % p;
    out.insert(out.end(), r, q + 1);
    if (q > 0) out.insert(out.end(), p - r, q);
  }
  return Representation(sub, std::move(out));
}

std::int64_t invariant_D(const Representation& rep, int m) {
  const GroupSpec& spec = rep.spec();
  const int n = spec.n();
  if (m < 0 || m >= n) throw DomainError("index m = " + std::to_string(m) + " outside [0, n-1]");
  const std::int64_t p = spec.p();
  std::int64_t total = 0;
  for (std::int64_t e : rep.summands()) {
    const auto s = digit_sums(e, spec);
    std::int64_t value = checked::mul(spec.power(n - 1), s[m]);
    for (int l = m + 1; l < n; ++l) {
      // p^{n-1} (p-1) p^{m-l} S^(l); the exponent n-1+m-l is never negative.
      value = checked::sub(value, checked::mul((p - 1) * spec.power(n - 1 + m - l), s[l]));
    }
    total = checked::add(total, value);
  }
  return total;
}

std::vector<std::int64_t> invariant_D_all(const Representation& rep) {
  std::vector<std::int64_t> out;
  out.reserve(rep.spec().n());
  for (int m = 0; m < rep.spec().n(); ++m) out.push_back(invariant_D(rep, m));
  return out;
}

std::int64_t invariant_D_oracle(const Representation& rep, int m) {
  const GroupSpec& spec = rep.spec();
  if (m < 0 || m >= spec.n()) throw DomainError("index m = " + std::to_string(m) + " outside [0, n-1]");
  std::vector<std::int64_t> r(spec.n());
  for (int i = 0; i < spec.n(); ++i) r[i] = spec.power(i);
  std::vector<std::int64_t> shifted = r;
  shifted[m] = checked::add(shifted[m], spec.order());
  return checked::sub(v_formula(rep, shifted), v_formula(rep, r));
}

}  // namespace wmk
