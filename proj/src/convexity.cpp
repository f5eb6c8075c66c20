#include "orthozeros/convexity.hpp"

#include <cmath>

namespace orthozeros {

namespace {

constexpr const char* kJRootAnalysis = "j-root-analysis";

ConvexityReport make_report(const FamilySpec& spec,
                            std::vector<LabeledInterval> pieces) {
  ConvexityReport report;
  report.spec = spec;
  report.partition = std::move(pieces);
  for (std::size_t i = 1; i < report.partition.size(); ++i) {
    report.boundaries.push_back(report.partition[i].span.lo);
  }
  return report;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Label of one sign-constant piece of j.  The midpoint decides; the
// quarter points back it up if the midpoint happens to sit on a root.
Label piece_label(const FamilySpec& spec, double lo, double hi) {
  for (double w : {0.5, 0.25, 0.75}) {
    const double s = j_eval(spec, lo + w * (hi - lo));
    if (s > 0.0) return Label::Convex;
    if (s < 0.0) return Label::Concave;
  }
  return Label::Convex;
}

}  // namespace

std::string to_string(Label label) {
  return label == Label::Convex ? "convex" : "concave";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Agrees: return "agrees";
    case Verdict::Disagrees: return "disagrees";
    case Verdict::Straddles: return "straddles";
    case Verdict::BelowTolerance: return "below_tolerance";
  }
  return "unknown";
}

std::string to_string(AsymptoticPattern pattern) {
  switch (pattern) {
    case AsymptoticPattern::ConvexConcave: return "convex-concave";
    case AsymptoticPattern::ConcaveConvexConcave: return "concave-convex-concave";
    case AsymptoticPattern::ConvexConcaveConvex: return "convex-concave-convex";
    case AsymptoticPattern::ConcaveConvexConcaveConvex:
      return "concave-convex-concave-convex";
  }
  return "unknown";
}

std::vector<Label> pattern_labels(AsymptoticPattern pattern) {
  switch (pattern) {
    case AsymptoticPattern::ConvexConcave:
      return {Label::Convex, Label::Concave};
    case AsymptoticPattern::ConcaveConvexConcave:
      return {Label::Concave, Label::Convex, Label::Concave};
    case AsymptoticPattern::ConvexConcaveConvex:
      return {Label::Convex, Label::Concave, Label::Convex};
    case AsymptoticPattern::ConcaveConvexConcaveConvex:
      return {Label::Concave, Label::Convex, Label::Concave, Label::Convex};
  }
  return {};
}

ConvexityReport classify_theoretical(const FamilySpec& spec,
                                     const NormalFormProfile& profile) {
  validate(spec, Purpose::Classification);
  const Interval sup = profile.support_interval;

  if (spec.kind == FamilyKind::Laguerre) {
    const double a = spec.alpha;
    const double n = spec.degree;
    const bool split = a > 3.0 && n > (a + 1.0) / (a - 3.0);
    if (split) {
      const double t0 = *profile.t0;
      return make_report(
          spec, {{Interval{sup.lo, t0}, Label::Concave, "laguerre-split-at-t0"},
                 {Interval{t0, sup.hi}, Label::Convex, "laguerre-split-at-t0"}});
    }
    // F is decreasing on all of (x_1, inf): every zero lands in the
    // decreasing regime, so the spacings increase throughout.
    return make_report(
        spec, {{sup, Label::Convex, "laguerre-decreasing-F"}});
  }

  if (spec.kind == FamilyKind::Jacobi) {
    const double a = std::abs(spec.alpha);
    const double b = std::abs(spec.beta);
    if (a > 1.0 && b < 1.0 && profile.discriminant_sign < 0) {
      // j has no stationary point and is positive at both endpoints, so F
      // decreases across the whole interval.
      return make_report(spec, {{sup, Label::Convex, "jacobi-monotone-F"}});
    }
    return classify_from_j_roots(spec, profile);
  }

  // Ultraspherical.  Exact |alpha| = 1 sits on every case boundary; the
  // j-root analysis gives the unambiguous answer there.
  const double a = std::abs(spec.alpha);
  if (a == 1.0) return classify_from_j_roots(spec, profile);
  if (a < 1.0) {
    return make_report(
        spec,
        {{Interval{-1.0, 0.0}, Label::Convex, "ultraspherical-central-root"},
         {Interval{0.0, 1.0}, Label::Concave, "ultraspherical-central-root"}});
  }
  if (profile.discriminant_sign <= 0) {
    // j monotone increasing through its only root at 0.
    return make_report(
        spec,
        {{Interval{-1.0, 0.0}, Label::Concave, "ultraspherical-monotone-j"},
         {Interval{0.0, 1.0}, Label::Convex, "ultraspherical-monotone-j"}});
  }
  const double T1 = (*profile.T12)[0];
  const double T2 = (*profile.T12)[1];
  return make_report(
      spec,
      {{Interval{-1.0, T1}, Label::Concave, "ultraspherical-outer-roots"},
       {Interval{T1, 0.0}, Label::Convex, "ultraspherical-outer-roots"},
       {Interval{0.0, T2}, Label::Concave, "ultraspherical-outer-roots"},
       {Interval{T2, 1.0}, Label::Convex, "ultraspherical-outer-roots"}});
}

ConvexityReport classify_from_j_roots(const FamilySpec& spec,
                                      const NormalFormProfile& profile) {
  if (spec.kind == FamilyKind::Laguerre) {
    throw UnsupportedFamily("classify_from_j_roots is defined for jacobi/ultraspherical only");
  }
  if (!profile.z_aux || !(*profile.z_aux > 0.0)) {
    throw DegenerateCubic("classify_from_j_roots: z_aux <= 0, oscillation conditions violated");
  }

  const std::vector<double> roots = j_roots_in_support(spec);
  std::vector<double> edges{-1.0};
  edges.insert(edges.end(), roots.begin(), roots.end());
  edges.push_back(1.0);

  std::vector<LabeledInterval> pieces;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const Label label = piece_label(spec, edges[i], edges[i + 1]);
    if (!pieces.empty() && pieces.back().label == label) {
      // A root without a sign change (tangency) separates nothing.
      pieces.back().span.hi = edges[i + 1];
    } else {
      pieces.push_back({Interval{edges[i], edges[i + 1]}, label, kJRootAnalysis});
    }
  }
  return make_report(spec, std::move(pieces));
}

AsymptoticPattern asymptotic_pattern(double alpha, double beta) {
  const bool wide_a = std::abs(alpha) > 1.0;
  const bool wide_b = std::abs(beta) > 1.0;
  if (!wide_a && !wide_b) return AsymptoticPattern::ConvexConcave;
  if (!wide_a && wide_b) return AsymptoticPattern::ConcaveConvexConcave;
  if (wide_a && !wide_b) return AsymptoticPattern::ConvexConcaveConvex;
  return AsymptoticPattern::ConcaveConvexConcaveConvex;
}

EmpiricalClassification classify_empirical(const ZeroSet& zs,
                                           const ConvexityReport& report,
                                           double tol_rel) {
  const std::size_t n = zs.zeros.size();
  if (n < 3) {
    throw DegreeTooSmall("classify_empirical: needs n >= 3 for second differences");
  }

  EmpiricalClassification result;
  result.triples.reserve(n - 2);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    TripleClassification tc;
    tc.k = static_cast<int>(i) + 1;
    const double left = zs.zeros[i];
    const double right = zs.zeros[i + 2];
    for (std::size_t p = 0; p < report.partition.size(); ++p) {
      const Interval& span = report.partition[p].span;
      if (left >= span.lo && right <= span.hi) {
        tc.piece = static_cast<int>(p);
        break;
      }
    }
    const double sd = zs.second_differences[i];
    tc.sign = sign_of(sd);
    if (std::abs(sd) <= tol_rel * zs.spacings[i]) {
      tc.verdict = Verdict::BelowTolerance;
    } else if (!tc.piece) {
      tc.verdict = Verdict::Straddles;
    } else {
      const Label label = report.partition[*tc.piece].label;
      const bool match = (tc.sign > 0) == (label == Label::Convex);
      tc.verdict = match ? Verdict::Agrees : Verdict::Disagrees;
    }
    result.triples.push_back(tc);
  }
  return result;
}

std::vector<Label> empirical_label_runs(const ZeroSet& zs,
                                        const std::vector<double>& boundaries,
                                        double tol_rel) {
  std::vector<Label> runs;
  for (std::size_t i = 0; i + 2 < zs.zeros.size(); ++i) {
    bool straddles = false;
    for (double b : boundaries) {
      if (zs.zeros[i] < b && b < zs.zeros[i + 2]) {
        straddles = true;
        break;
      }
    }
    const double sd = zs.second_differences[i];
    if (straddles || std::abs(sd) <= tol_rel * zs.spacings[i]) continue;
    const Label label = sd > 0.0 ? Label::Convex : Label::Concave;
    if (runs.empty() || runs.back() != label) runs.push_back(label);
  }
  return runs;
}

}  // namespace orthozeros
