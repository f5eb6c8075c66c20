#include "orthozeros/families.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace orthozeros {

namespace {

constexpr int kMaxDegree = 200;
constexpr double kMaxParameter = 30.0;

std::string spec_label(const FamilySpec& s) {
  std::ostringstream os;
  os << to_string(s.kind) << "(alpha=" << s.alpha;
  if (s.kind == FamilyKind::Jacobi) os << ", beta=" << s.beta;
  os << ", n=" << s.degree << ")";
  return os.str();
}

[[noreturn]] void fail_range(const FamilySpec& s, const std::string& inequality) {
  throw ParameterOutOfRange(spec_label(s) + ": requires " + inequality);
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Laguerre: return "laguerre";
    case FamilyKind::Jacobi: return "jacobi";
    case FamilyKind::Ultraspherical: return "ultraspherical";
  }
  return "unknown";
}

FamilySpec FamilySpec::laguerre(double alpha, int degree) {
  return FamilySpec{FamilyKind::Laguerre, alpha, 0.0, degree};
}

FamilySpec FamilySpec::jacobi(double alpha, double beta, int degree) {
  return FamilySpec{FamilyKind::Jacobi, alpha, beta, degree};
}

FamilySpec FamilySpec::ultraspherical(double alpha, int degree) {
  return FamilySpec{FamilyKind::Ultraspherical, alpha, alpha, degree};
}

Interval support(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::Laguerre) {
    return Interval{0.0, std::numeric_limits<double>::infinity()};
  }
  return Interval{-1.0, 1.0};
}

const FamilySpec& validate(const FamilySpec& spec, Purpose purpose) {
  if (spec.degree < 1) {
    throw DegreeNonPositive(spec_label(spec) + ": requires n >= 1");
  }
  if (spec.degree > kMaxDegree) {
    throw Overflow(spec_label(spec) + ": n exceeds the supported cap of 200");
  }
  const double a = spec.alpha;
  const double b = spec.effective_beta();
  if (!std::isfinite(a) || std::abs(a) > kMaxParameter) {
    throw Overflow(spec_label(spec) + ": |alpha| exceeds the supported cap of 30");
  }
  if (spec.kind != FamilyKind::Laguerre &&
      (!std::isfinite(b) || std::abs(b) > kMaxParameter)) {
    throw Overflow(spec_label(spec) + ": |beta| exceeds the supported cap of 30");
  }

  const double n = spec.degree;
  switch (spec.kind) {
    case FamilyKind::Laguerre:
      // Orthogonality on (0, inf) with weight t^alpha e^-t needs alpha > -1
      // for either purpose; the convexity results assume the same regime.
      if (!(a > -1.0)) fail_range(spec, "alpha > -1");
      break;
    case FamilyKind::Jacobi:
    case FamilyKind::Ultraspherical:
      if (purpose == Purpose::ZeroComputation) {
        if (!(a > -1.0)) fail_range(spec, "alpha > -1");
        if (!(b > -1.0)) fail_range(spec, "beta > -1");
      } else {
        // Oscillation conditions for the solution on (-1, 1).
        if (!(n + a + b > 0.0)) fail_range(spec, "n + alpha + beta > 0");
        if (!(n + a > 0.0)) fail_range(spec, "n + alpha > 0");
        if (!(n + b > 0.0)) fail_range(spec, "n + beta > 0");
      }
      break;
  }
  return spec;
}

EvalResult evaluate(const FamilySpec& spec, double t) {
  validate(spec, Purpose::ZeroComputation);
  if (!std::isfinite(t)) {
    throw DomainViolation(spec_label(spec) + ": evaluation point must be finite");
  }
  const int n = spec.degree;
  double p = 0.0, dp = 0.0;

  if (spec.kind == FamilyKind::Laguerre) {
    const double a = spec.alpha;
    double pm1 = 1.0, dpm1 = 0.0;          // L_0
    p = 1.0 + a - t;                       // L_1
    dp = -1.0;
    for (int k = 2; k <= n; ++k) {
      // k L_k = (2k-1+alpha-t) L_{k-1} - (k-1+alpha) L_{k-2}
      const double c = 2.0 * k - 1.0 + a - t;
      const double d = k - 1.0 + a;
      const double pk = (c * p - d * pm1) / k;
      const double dpk = (c * dp - p - d * dpm1) / k;
      pm1 = p;
      dpm1 = dp;
      p = pk;
      dp = dpk;
    }
  } else {
    const double a = spec.alpha;
    const double b = spec.effective_beta();
    double pm1 = 1.0, dpm1 = 0.0;                    // P_0
    p = 0.5 * ((a - b) + (a + b + 2.0) * t);         // P_1
    dp = 0.5 * (a + b + 2.0);
    for (int k = 2; k <= n; ++k) {
      const double s = 2.0 * k + a + b;
      const double c0 = 2.0 * k * (k + a + b) * (s - 2.0);
      const double c1 = (s - 1.0) * (a * a - b * b);
      const double c2 = (s - 1.0) * s * (s - 2.0);
      const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
      const double pk = ((c1 + c2 * t) * p - c3 * pm1) / c0;
      const double dpk = ((c1 + c2 * t) * dp + c2 * p - c3 * dpm1) / c0;
      pm1 = p;
      dpm1 = dp;
      p = pk;
      dp = dpk;
    }
  }

  if (!std::isfinite(p) || !std::isfinite(dp)) {
    throw Overflow(spec_label(spec) +
                   ": value exceeds the representable range; rescale degree or parameters");
  }
  return EvalResult{p, dp};
}

RecurrenceCoefficients recurrence_coefficients(const FamilySpec& spec) {
  validate(spec, Purpose::ZeroComputation);
  const int n = spec.degree;
  RecurrenceCoefficients rc;
  rc.diagonal.resize(n);
  rc.offdiagonal.resize(n - 1);

  if (spec.kind == FamilyKind::Laguerre) {
    const double a = spec.alpha;
    for (int k = 0; k < n; ++k) rc.diagonal[k] = 2.0 * k + a + 1.0;
    for (int k = 1; k < n; ++k) rc.offdiagonal[k - 1] = std::sqrt(k * (k + a));
  } else {
    const double a = spec.alpha;
    const double b = spec.effective_beta();
    // Chihara/Gautschi recurrence for the weight (1-t)^a (1+t)^b.  The k = 0
    // diagonal and k = 1 off-diagonal entries use the cancelled forms, which
    // stay finite when a + b hits 0 or -1.
    rc.diagonal[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
      const double s = 2.0 * k + a + b;
      rc.diagonal[k] = (b * b - a * a) / (s * (s + 2.0));
    }
    if (n > 1) {
      const double ab = a + b;
      rc.offdiagonal[0] =
          std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
      for (int k = 2; k < n; ++k) {
        const double s = 2.0 * k + ab;
        const double bk = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                          (s * s * (s + 1.0) * (s - 1.0));
        rc.offdiagonal[k - 1] = std::sqrt(bk);
      }
    }
  }
  return rc;
}

}  // namespace orthozeros
