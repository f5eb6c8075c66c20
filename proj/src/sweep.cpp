#include "orthozeros/sweep.hpp"

#include <algorithm>

#include "orthozeros/bounds.hpp"
#include "orthozeros/convexity.hpp"

namespace orthozeros {

SweepGrid default_sweep() {
  SweepGrid grid;
  grid.description =
      "default-v1: laguerre alpha {-0.5,0,1,2,3,3.5,4,6} x n {3,5,10,20,40}; "
      "ultraspherical alpha {-0.5,0,0.5,1,2,7} x n {2,4,5,7,15}; "
      "jacobi (alpha,beta) {(0,0),(0.5,0.5),(0.5,2),(2,0.5),(2,2),(20,0),"
      "(-0.5,0.7),(3,3)} x n {3,5,10,20}";

  for (double a : {-0.5, 0.0, 1.0, 2.0, 3.0, 3.5, 4.0, 6.0}) {
    for (int n : {3, 5, 10, 20, 40}) {
      grid.specs.push_back(FamilySpec::laguerre(a, n));
    }
  }
  for (double a : {-0.5, 0.0, 0.5, 1.0, 2.0, 7.0}) {
    for (int n : {2, 4, 5, 7, 15}) {
      grid.specs.push_back(FamilySpec::ultraspherical(a, n));
    }
  }
  const std::pair<double, double> jacobi_params[] = {
      {0.0, 0.0}, {0.5, 0.5}, {0.5, 2.0}, {2.0, 0.5},
      {2.0, 2.0}, {20.0, 0.0}, {-0.5, 0.7}, {3.0, 3.0}};
  for (const auto& [a, b] : jacobi_params) {
    for (int n : {3, 5, 10, 20}) {
      grid.specs.push_back(FamilySpec::jacobi(a, b, n));
    }
  }
  return grid;
}

SweepSummary run_sweep(const SweepGrid& grid, double tol_rel) {
  SweepSummary summary;
  summary.grid_description = grid.description;

  for (const FamilySpec& spec : grid.specs) {
    ++summary.specs_run;
    const BoundSuiteReport suite = verify_suite(spec);
    const NormalFormProfile profile = critical_points(spec);

    for (const GapBoundRecord& rec : suite.records) {
      if (rec.lower) ++summary.bound_checks;
      if (rec.upper) ++summary.bound_checks;
    }
    for (const auto* g : {&suite.global_lower_derived, &suite.global_upper_F0,
                          &suite.global_lower_F0, &suite.global_lower_FT2}) {
      if (g->has_value()) ++summary.bound_checks;
    }
    if (suite.global_lower_paper) {
      ++summary.paper_literal_checks;
      if (!suite.global_lower_paper->satisfied) ++summary.paper_literal_failures;
    }
    summary.violations += static_cast<int>(suite.violations.size());
    for (const BoundViolation& v : suite.violations) {
      summary.violation_details.push_back({spec, v.k, v.which, v.margin});
    }

    const ZeroSet zs = compute_zeros(spec);
    if (zs.zeros.size() >= 3) {
      const ConvexityReport report = classify_theoretical(spec, profile);
      const EmpiricalClassification cls = classify_empirical(zs, report, tol_rel);
      for (const TripleClassification& tc : cls.triples) {
        ++summary.triples_classified;
        switch (tc.verdict) {
          case Verdict::Agrees: ++summary.agreements; break;
          case Verdict::Disagrees:
            ++summary.disagreements;
            summary.violation_details.push_back(
                {spec, tc.k, "empirical-convexity-disagrees", 0.0});
            break;
          case Verdict::Straddles: ++summary.straddles; break;
          case Verdict::BelowTolerance: ++summary.below_tolerance; break;
        }
      }
    }

    if (spec.kind == FamilyKind::Laguerre) {
      if (profile.t0 && zs.zeros.front() < *profile.t0) {
        ++summary.laguerre_first_zero_below_t0;
      }
      const FirstZeroBounds fzb = first_zero_bounds(spec);
      if (!(fzb.lower < std::min(fzb.upper_a, fzb.upper_b))) {
        ++summary.first_zero_bound_anomalies;
      }
    }
  }
  return summary;
}

}  // namespace orthozeros
