#pragma once

// Exact convergence criterion for the motivic integral of L^{d-v} over
// Z/p^nZ-covers, and the singularity verdicts it implies for V/G.
//
// With D^(l) the D-invariants of V, the criterion values are
//   c_m = 1 - p^{-(n-m)} - sum_{l=m}^{n-1} D^(l) / p^{2n-1-l},  m = 0..n-1.
// All c_m < 0: the integral converges. All c_m <= 0: its terms have bounded
// dimension. Everything is decided on exact rationals.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wmk/grothendieck.hpp"
#include "wmk/representation.hpp"

namespace wmk {

enum class ConvergenceStatus { kStrict, kBoundedBoundary, kUnbounded };

std::string to_string(ConvergenceStatus status);

struct ConvergenceReport {
  std::vector<Rational> c_values;
  ConvergenceStatus status = ConvergenceStatus::kUnbounded;
};

std::vector<Rational> criterion_values(const Representation& rep);
ConvergenceReport convergence_status(const Representation& rep);

enum class CanonicalVerdict {
  kYesIfConvergent,               // converges, so X is canonical
  kNo,                            // not log canonical, hence not canonical
  kConditionalOnLogResolutionNo,  // not canonical provided X has a log resolution
};

std::string to_string(CanonicalVerdict verdict);

inline constexpr const char* kHypothesesViolatedLabel =
    "formula value only - wild McKay hypotheses violated";

struct SingularityVerdict {
  ConvergenceReport report;
  bool log_canonical = false;
  CanonicalVerdict canonical = CanonicalVerdict::kConditionalOnLogResolutionNo;
  /// is_effective && !has_pseudo_reflection
  bool hypotheses_ok = false;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
};

SingularityVerdict classify_quotient(const Representation& rep);

/// Dimension thresholds for an effective indecomposable V with no
/// pseudo-reflection: canonical if d >= p + p^{n-1}, log canonical iff
/// d >= p - 1 + p^{n-1}. The threshold argument covers n >= 3; for n <= 2 the
/// exact criterion is reported alongside and may disagree (n = 1 does).
struct DimensionCriterion {
  std::int64_t dimension = 0;
  std::int64_t canonical_bound = 0;
  std::int64_t log_canonical_bound = 0;
  bool canonical = false;
  bool log_canonical = false;
  bool threshold_proven = false;  // n >= 3
  ConvergenceStatus criterion_status = ConvergenceStatus::kUnbounded;
  bool agrees_with_criterion = false;
  std::vector<std::string> notes;
};

/// Throws HypothesisError naming the violated hypothesis.
DimensionCriterion dimension_criterion(const Representation& rep);

/// Verdict for a quotient by a finite group whose p-Sylow subgroup is
/// Z/p^nZ, given the restriction of the representation to that subgroup.
struct SylowVerdict {
  ConvergenceReport report;
  bool log_terminal = false;
  bool log_canonical = false;
  bool hypotheses_ok = false;
  std::vector<std::string> warnings;
};

SylowVerdict sylow_classify(const Representation& rep);

/// classify_quotient over every indecomposable W_d, d = 1..p^n.
struct SweepRow {
  std::int64_t dimension = 0;
  bool effective = false;
  bool pseudo_reflection = false;
  ConvergenceReport report;
  bool log_canonical = false;
  CanonicalVerdict canonical = CanonicalVerdict::kConditionalOnLogResolutionNo;
};

struct SweepReport {
  std::int64_t p = 0;
  int n = 0;
  std::vector<SweepRow> rows;
  std::int64_t log_canonical_bound = 0;  // p - 1 + p^{n-1}
  std::int64_t canonical_bound = 0;      // p + p^{n-1}
  /// Smallest hypothesis-valid d (effective, no pseudo-reflection) that is
  /// log canonical, resp. asserted canonical by the criterion.
  std::optional<std::int64_t> first_log_canonical;
  std::optional<std::int64_t> first_canonical;
  /// On every valid d: log canonical iff d >= log_canonical_bound, and
  /// d >= canonical_bound implies STRICT.
  bool thresholds_consistent = false;
};

SweepReport sweep(const GroupSpec& spec);

}  // namespace wmk
