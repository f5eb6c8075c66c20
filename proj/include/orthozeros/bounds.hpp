#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthozeros/normal_form.hpp"
#include "orthozeros/zeros.hpp"

namespace orthozeros {

/// Direction-aware spacing bounds for one gap (x_k, x_{k+1}).
/// Satisfied flags use exact strict comparison: the underlying inequalities
/// are strict, and near-ties should surface in the margins, not vanish
/// inside a tolerance.
struct GapBoundRecord {
  int k = 0;  // 1-based gap index
  double x_k = 0.0;
  double x_k1 = 0.0;
  double spacing = 0.0;
  std::optional<double> lower, upper;
  std::string lower_source, upper_source;  // which formula produced the bound
  bool lower_satisfied = true;
  bool upper_satisfied = true;
  std::optional<double> lower_margin;  // spacing - lower
  std::optional<double> upper_margin;  // upper - spacing
};

/// One whole-interval bound check (applies to every gap at once).
struct GlobalBound {
  double value = 0.0;
  bool satisfied = true;
  double margin = 0.0;  // min spacing - value for lowers, value - max spacing for uppers
};

struct BoundViolation {
  int k = 0;  // gap index, 0 for global bounds
  std::string which;
  double margin = 0.0;
};

/// Every applicable bound checked against every applicable gap for one spec.
/// The literal Laguerre global bound is tabulated separately from the
/// violations list: it is tracked as written, while the sup-F derived value
/// carries the actual guarantee.
struct BoundSuiteReport {
  FamilySpec spec;
  std::optional<GlobalBound> global_lower_paper;    // Laguerre literal formula
  std::optional<GlobalBound> global_lower_derived;  // pi/sqrt(sup F on (x_1, inf))
  std::optional<GlobalBound> global_upper_F0;       // ultraspherical |alpha| <= 1 cap
  std::optional<GlobalBound> global_lower_F0;       // ultraspherical monotone-j case
  std::optional<GlobalBound> global_lower_FT2;      // ultraspherical outer-roots case
  std::vector<GapBoundRecord> records;
  std::vector<BoundViolation> violations;
};

/// The two Laguerre whole-interval lower bounds on gap size: the literal
/// closed-form value, and pi/sqrt(sup F over (x_1, inf)) when that supremum
/// is finite.  They differ by a factor sqrt(alpha^2-1); both are reported
/// and verified independently.
std::pair<double, std::optional<double>> laguerre_global_bound(
    const FamilySpec& spec, const NormalFormProfile& profile, const ZeroSet& zs);

/// Per-gap bounds: on a gap inside a monotone piece of F with positive
/// endpoint values, pi/sqrt(F) at the max-side endpoint is a lower bound and
/// at the min-side endpoint an upper bound; gaps containing a breakpoint
/// fall back to sup/inf of F over the gap.
std::vector<GapBoundRecord> gap_bounds(const FamilySpec& spec,
                                       const NormalFormProfile& profile,
                                       const ZeroSet& zs);

/// Exactly one of the three is populated, following the ultraspherical case
/// split on |alpha| vs 1 and (n+alpha)(n+alpha+1) vs 2(alpha^2-1).
struct UltrasphericalGlobalBounds {
  std::optional<double> upper_from_F0;
  std::optional<double> lower_from_F0;
  std::optional<double> lower_from_FT2;
};

UltrasphericalGlobalBounds ultraspherical_global_bounds(
    const FamilySpec& spec, const NormalFormProfile& profile);

/// Computes zeros, evaluates every applicable bound, and collects the
/// violations.  Deterministic.
BoundSuiteReport verify_suite(const FamilySpec& spec);

}  // namespace orthozeros
