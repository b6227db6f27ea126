#pragma once

// The v-function of a representation on Z/p^nZ-covers of the formal disk.

#include <cstdint>
#include <span>

#include "wmk/ramification.hpp"
#include "wmk/representation.hpp"

namespace wmk {

using VValue = std::int64_t;

/// Ceiling-sum formula evaluated at an arbitrary tuple t of n positive
/// integers: with l the telescoped lower sequence of t, each summand W_e
/// contributes
///   sum over base-p digit tuples (i_0..i_{n-1}) of 0..e-1 of
///   ceil((i_0 p^{n-1} l_0 + i_1 p^{n-2} l_1 + ... + i_{n-1} l_{n-1}) / p^n).
/// For an admissible jump sequence this is v at a connected cover. The value
/// is non-negative whenever t is non-decreasing; arbitrary positive tuples can
/// make l, and so v, negative.
/// Throws DomainError on a wrong length or a non-positive entry.
VValue v_formula(const Representation& rep, std::span<const std::int64_t> t);

VValue v_jumps(const Representation& rep, const JumpSequence& u);

/// v at any stratum: 0 on the trivial cover, the ceiling formula at the upper
/// jumps for connected covers, and otherwise v of the restriction to the
/// index-p subgroup at (j_1, ..., j_{n-1}).
VValue v_stratum(const Representation& rep, const OrderTuple& j);

/// Whether v(r + p^n q) == sum_m D^(m) q_m + v(r).
bool check_decomposition(const Representation& rep, std::span<const std::int64_t> r,
                         std::span<const std::int64_t> q);

}  // namespace wmk
