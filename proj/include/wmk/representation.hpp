#pragma once

// Representations of Z/p^nZ over an algebraically closed field of
// characteristic p. Up to isomorphism such a representation is a direct sum
// of the indecomposables W_1, ..., W_{p^n} (single unipotent Jordan blocks),
// so it is stored as the multiset of their dimensions.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wmk/group.hpp"

namespace wmk {

class Representation {
 public:
  /// Throws DomainError if the multiset is empty or some dimension is
  /// outside [1, p^n].
  Representation(GroupSpec spec, std::vector<std::int64_t> summands);

  static Representation indecomposable(GroupSpec spec, std::int64_t dimension);

  const GroupSpec& spec() const { return spec_; }
  /// Summand dimensions, sorted descending.
  std::span<const std::int64_t> summands() const { return summands_; }
  std::int64_t dimension() const { return dimension_; }
  bool is_indecomposable() const { return summands_.size() == 1; }

  Representation direct_sum(const Representation& other) const;

  /// "p=2,n=3,dims=5+3+1"
  std::string to_string() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  GroupSpec spec_;
  std::vector<std::int64_t> summands_;
  std::int64_t dimension_ = 0;
};

/// The generator acts with full order p^n, i.e. some summand exceeds p^{n-1}.
bool is_effective(const Representation& rep);

/// Some nontrivial group element fixes a hyperplane. The element sigma^{p^a}
/// fixes a subspace of codimension sum_i max(d_i - p^a, 0).
bool has_pseudo_reflection(const Representation& rep);

/// Restriction to the index-p subgroup: W_{qp+r} becomes
/// W_{q+1}^{r} + W_q^{p-r}. Throws DomainError when n == 1.
Representation restrict_to_subgroup(const Representation& rep);

/// D_V^(m), additive over summands. Throws DomainError for m outside [0, n-1].
std::int64_t invariant_D(const Representation& rep, int m);
std::vector<std::int64_t> invariant_D_all(const Representation& rep);

/// D_V^(m) recovered through the v-function as v(r + p^n e_m) - v(r) with
/// r = (1, p, ..., p^{n-1}).
std::int64_t invariant_D_oracle(const Representation& rep, int m);

}  // namespace wmk
