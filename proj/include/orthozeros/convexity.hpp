#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthozeros/normal_form.hpp"
#include "orthozeros/zeros.hpp"

namespace orthozeros {

/// Convex: consecutive spacings increase left to right (F strictly
/// decreasing); Concave: spacings decrease (F strictly increasing).
enum class Label { Convex, Concave };

std::string to_string(Label label);

/// One labeled piece of the support interval, with the rule that produced it.
struct LabeledInterval {
  Interval span;
  Label label = Label::Convex;
  std::string provenance;
};

/// Partition of the support interval into alternating convex/concave pieces.
struct ConvexityReport {
  FamilySpec spec;
  std::vector<LabeledInterval> partition;  // ordered, closures cover support
  std::vector<double> boundaries;          // interior breakpoints, ascending
};

enum class Verdict { Agrees, Disagrees, Straddles, BelowTolerance };

std::string to_string(Verdict verdict);

/// Empirical check of one zero triple (x_k, x_{k+1}, x_{k+2}) against the
/// theoretical partition.
struct TripleClassification {
  int k = 0;                  // 1-based triple index
  std::optional<int> piece;   // partition index containing the whole triple
  int sign = 0;               // sign of the second difference
  Verdict verdict = Verdict::Agrees;
};

struct EmpiricalClassification {
  std::vector<TripleClassification> triples;  // one entry per k in [1, n-2]
};

/// Large-degree convexity pattern of Jacobi zeros, read left to right.
enum class AsymptoticPattern {
  ConvexConcave,                // |alpha| <= 1, |beta| <= 1
  ConcaveConvexConcave,         // |alpha| <= 1, |beta| >  1
  ConvexConcaveConvex,          // |alpha| >  1, |beta| <= 1
  ConcaveConvexConcaveConvex,   // |alpha| >  1, |beta| >  1
};

std::string to_string(AsymptoticPattern pattern);
std::vector<Label> pattern_labels(AsymptoticPattern pattern);

/// Partition from the family's case analysis; falls through to the j-root
/// analysis where no whole-interval case applies, and whenever |alpha| or
/// |beta| sits exactly on a case boundary (the case inequalities are
/// ambiguous there, the sign of j is not).
ConvexityReport classify_theoretical(const FamilySpec& spec,
                                     const NormalFormProfile& profile);

/// Partition from the sign pattern of j between its real roots in (-1, 1):
/// j > 0 means F decreasing (convex zeros), j < 0 means F increasing
/// (concave zeros).  At most 4 pieces.
ConvexityReport classify_from_j_roots(const FamilySpec& spec,
                                      const NormalFormProfile& profile);

/// The four-way large-n pattern split on |alpha|, |beta| vs 1.
AsymptoticPattern asymptotic_pattern(double alpha, double beta);

/// Per-triple comparison of second-difference signs with the partition.
/// tol_rel scales the spacing-relative dead band for "zero" second
/// differences (symmetric middles legitimately produce exact zeros).
EmpiricalClassification classify_empirical(const ZeroSet& zs,
                                           const ConvexityReport& report,
                                           double tol_rel = 1e-9);

/// Sign-run sequence of the second differences with straddling and
/// below-tolerance triples excluded: the empirical counterpart of the
/// partition's label sequence.
std::vector<Label> empirical_label_runs(const ZeroSet& zs,
                                        const std::vector<double>& boundaries,
                                        double tol_rel = 1e-9);

}  // namespace orthozeros
