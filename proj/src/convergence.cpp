#include "wmk/convergence.hpp"

#include <algorithm>

#include "wmk/errors.hpp"

namespace wmk {

namespace {

Rational inverse_power(std::int64_t p, int k) {
  return Rational(BigInt(1), boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k)));
}

void add_hypothesis_warnings(const Representation& rep, bool& ok, std::vector<std::string>& warnings) {
  const bool effective = is_effective(rep);
  const bool reflection = has_pseudo_reflection(rep);
  ok = effective && !reflection;
  if (!effective) warnings.emplace_back("representation is not effective (no summand exceeds p^(n-1))");
  if (reflection) warnings.emplace_back("representation has a pseudo-reflection");
  if (!ok) warnings.emplace_back(kHypothesesViolatedLabel);
}

}  // namespace

std::string to_string(ConvergenceStatus status) {
  switch (status) {
    case ConvergenceStatus::kStrict: return "STRICT";
    case ConvergenceStatus::kBoundedBoundary: return "BOUNDED_BOUNDARY";
    case ConvergenceStatus::kUnbounded: return "UNBOUNDED";
  }
  return "UNKNOWN";
}

std::string to_string(CanonicalVerdict verdict) {
  switch (verdict) {
    case CanonicalVerdict::kYesIfConvergent: return "YES_IF_CONVERGENT";
    case CanonicalVerdict::kNo: return "NO";
    case CanonicalVerdict::kConditionalOnLogResolutionNo: return "CONDITIONAL_ON_LOG_RESOLUTION_NO";
  }
  return "UNKNOWN";
}

std::vector<Rational> criterion_values(const Representation& rep) {
  const GroupSpec& spec = rep.spec();
  const int n = spec.n();
  const auto d = invariant_D_all(rep);
  std::vector<Rational> c(n);
  // Accumulate the tail sums from m = n-1 downwards.
  Rational tail;
  for (int m = n - 1; m >= 0; --m) {
    tail += Rational(BigInt(d[m])) * inverse_power(spec.p(), 2 * n - 1 - m);
    c[m] = Rational(1) - inverse_power(spec.p(), n - m) - tail;
  }
  return c;
}

ConvergenceReport convergence_status(const Representation& rep) {
  ConvergenceReport out{criterion_values(rep), ConvergenceStatus::kStrict};
  const bool any_positive = std::any_of(out.c_values.begin(), out.c_values.end(),
                                        [](const Rational& c) { return c.sign() > 0; });
  const bool any_zero = std::any_of(out.c_values.begin(), out.c_values.end(),
                                    [](const Rational& c) { return c.is_zero(); });
  if (any_positive) {
    out.status = ConvergenceStatus::kUnbounded;
  } else if (any_zero) {
    out.status = ConvergenceStatus::kBoundedBoundary;
  }
  return out;
}

SingularityVerdict classify_quotient(const Representation& rep) {
  SingularityVerdict v;
  v.report = convergence_status(rep);
  add_hypothesis_warnings(rep, v.hypotheses_ok, v.warnings);
  switch (v.report.status) {
    case ConvergenceStatus::kStrict:
      v.log_canonical = true;
      v.canonical = CanonicalVerdict::kYesIfConvergent;
      break;
    case ConvergenceStatus::kBoundedBoundary:
      v.log_canonical = true;
      v.canonical = CanonicalVerdict::kConditionalOnLogResolutionNo;
      v.notes.emplace_back("not canonical only if X admits a log resolution");
      break;
    case ConvergenceStatus::kUnbounded:
      v.log_canonical = false;
      v.canonical = CanonicalVerdict::kNo;
      break;
  }
  if (rep.spec().n() == 1) v.notes.emplace_back("n=1 case");
  return v;
}

DimensionCriterion dimension_criterion(const Representation& rep) {
  if (!rep.is_indecomposable()) {
    throw HypothesisError("dimension criterion requires an indecomposable representation");
  }
  if (!is_effective(rep)) throw HypothesisError("dimension criterion requires an effective representation");
  if (has_pseudo_reflection(rep)) {
    throw HypothesisError("dimension criterion requires a representation without pseudo-reflections");
  }
  const GroupSpec& spec = rep.spec();
  DimensionCriterion out;
  out.dimension = rep.dimension();
  const std::int64_t top = spec.power(spec.n() - 1);
  out.canonical_bound = spec.p() + top;
  out.log_canonical_bound = spec.p() - 1 + top;
  out.canonical = out.dimension >= out.canonical_bound;
  out.log_canonical = out.dimension >= out.log_canonical_bound;
  out.threshold_proven = spec.n() >= 3;
  out.criterion_status = convergence_status(rep).status;
  const bool crit_lc = out.criterion_status != ConvergenceStatus::kUnbounded;
  const bool crit_strict = out.criterion_status == ConvergenceStatus::kStrict;
  out.agrees_with_criterion = crit_lc == out.log_canonical && crit_strict == out.canonical;
  if (!out.threshold_proven) {
    out.notes.emplace_back("thresholds are established by this argument only for n >= 3; "
                           "use the exact criterion for n <= 2");
  }
  return out;
}

SylowVerdict sylow_classify(const Representation& rep) {
  SylowVerdict v;
  v.report = convergence_status(rep);
  add_hypothesis_warnings(rep, v.hypotheses_ok, v.warnings);
  v.log_terminal = v.report.status == ConvergenceStatus::kStrict;
  v.log_canonical = v.report.status != ConvergenceStatus::kUnbounded;
  return v;
}

SweepReport sweep(const GroupSpec& spec) {
  SweepReport out;
  out.p = spec.p();
  out.n = spec.n();
  const std::int64_t top = spec.power(spec.n() - 1);
  out.log_canonical_bound = spec.p() - 1 + top;
  out.canonical_bound = spec.p() + top;
  out.thresholds_consistent = true;
  for (std::int64_t d = 1; d <= spec.order(); ++d) {
    const auto rep = Representation::indecomposable(spec, d);
    const auto verdict = classify_quotient(rep);
    SweepRow row{d, is_effective(rep), has_pseudo_reflection(rep), verdict.report, verdict.log_canonical,
                 verdict.canonical};
    if (row.effective && !row.pseudo_reflection) {
      const bool strict = row.report.status == ConvergenceStatus::kStrict;
      if (row.log_canonical && !out.first_log_canonical) out.first_log_canonical = d;
      if (strict && !out.first_canonical) out.first_canonical = d;
      if (row.log_canonical != (d >= out.log_canonical_bound)) out.thresholds_consistent = false;
      if (d >= out.canonical_bound && !strict) out.thresholds_consistent = false;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace wmk
