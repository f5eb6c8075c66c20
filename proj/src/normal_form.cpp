#include "orthozeros/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace orthozeros {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDegenerateDiscriminantTol = 1e-8;

struct JacobiAux {
  double x, y, z;
};

JacobiAux jacobi_aux(const FamilySpec& spec) {
  const double a = spec.alpha;
  const double b = spec.effective_beta();
  const double n = spec.degree;
  return JacobiAux{a * a - 1.0, b * b - 1.0,
                   (a + b + 2.0 * n) * (a + b + 2.0 * n + 2.0)};
}

double ultra_leading(const FamilySpec& spec) {
  // (alpha+n)(alpha+n+1), the t^3 coefficient of j/4
  const double a = spec.alpha;
  const double n = spec.degree;
  return (a + n) * (a + n + 1.0);
}

double ultra_linear(const FamilySpec& spec) {
  // 2 + n + n^2 + alpha + 2 alpha n - alpha^2, the -t coefficient of j/4
  const double a = spec.alpha;
  const double n = spec.degree;
  return 2.0 + n + n * n + a + 2.0 * a * n - a * a;
}

void require_jacobi_like(const FamilySpec& spec, const char* op) {
  if (spec.kind == FamilyKind::Laguerre) {
    throw UnsupportedFamily(std::string(op) +
                            " is defined for jacobi/ultraspherical only"
                            " (laguerre uses t0 from critical_points)");
  }
}

// One-sided limit of F at a finite support endpoint of (-1, 1).
// The numerator of F is -z t^2 - 2(x-y) t - 2x - 2y + z, which equals -4x at
// t = 1 and -4y at t = -1; when it vanishes there the residual linear factor
// decides the sign, and when that vanishes too the numerator carries the full
// (t -+ 1)^2 factor and the limit is -z/16.
double jacobi_endpoint_limit(const JacobiAux& aux, bool at_plus_one) {
  const double corner = at_plus_one ? aux.x : aux.y;
  const double other = at_plus_one ? aux.y : aux.x;
  if (corner > 0.0) return -kInf;
  if (corner < 0.0) return kInf;
  if (aux.z > other) return kInf;
  if (aux.z < other) return -kInf;
  return -aux.z / 16.0;
}

double j_derivative(const JacobiAux& aux, double t) {
  return 3.0 * aux.z * t * t + 6.0 * (aux.x - aux.y) * t +
         (4.0 * aux.x + 4.0 * aux.y - aux.z);
}

// Real roots of the monic depressed cubic s^3 + a s + b.
std::vector<double> depressed_cubic_roots(double a, double b) {
  const double disc = -4.0 * a * a * a - 27.0 * b * b;
  if (a < 0.0 && disc > 0.0) {
    // Three distinct real roots (Viete's trigonometric form).
    const double m = 2.0 * std::sqrt(-a / 3.0);
    double c = 3.0 * b / (a * m);
    c = std::clamp(c, -1.0, 1.0);
    const double phi = std::acos(c);
    std::vector<double> roots(3);
    for (int k = 0; k < 3; ++k) {
      roots[k] = m * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0);
    }
    return roots;
  }
  // One real root (Cardano, cancellation-safe branch choice).
  const double half_b = 0.5 * b;
  const double dh = half_b * half_b + a * a * a / 27.0;
  const double sq = std::sqrt(std::max(dh, 0.0));
  const double u = (half_b <= 0.0) ? std::cbrt(-half_b + sq) : std::cbrt(-half_b - sq);
  const double v = (u != 0.0) ? -a / (3.0 * u) : 0.0;
  return {u + v};
}

}  // namespace

double normal_form_generic(const ODECoefficients& coeffs, double t) {
  if (!coeffs.domain.contains(t)) {
    throw DomainViolation("normal_form_generic: t outside the coefficient domain");
  }
  const double g = coeffs.g(t);
  return coeffs.f(t) - 0.25 * g * g - 0.5 * coeffs.g_prime(t);
}

ODECoefficients ode_coefficients(const FamilySpec& spec) {
  ODECoefficients c;
  c.domain = support(spec);
  const double a = spec.alpha;
  const double n = spec.degree;
  if (spec.kind == FamilyKind::Laguerre) {
    // t x'' + (alpha+1-t) x' + n x = 0
    c.g = [a](double t) { return (a + 1.0 - t) / t; };
    c.g_prime = [a](double t) { return -(a + 1.0) / (t * t); };
    c.f = [n](double t) { return n / t; };
  } else {
    // (1-t^2) x'' + (beta-alpha-(alpha+beta+2) t) x' + n(n+alpha+beta+1) x = 0
    const double b = spec.effective_beta();
    c.g = [a, b](double t) {
      return (b - a - (a + b + 2.0) * t) / (1.0 - t * t);
    };
    c.g_prime = [a, b](double t) {
      const double v = 1.0 - t * t;
      return (-(a + b + 2.0) * v + 2.0 * t * (b - a - (a + b + 2.0) * t)) / (v * v);
    };
    c.f = [a, b, n](double t) {
      return n * (n + a + b + 1.0) / (1.0 - t * t);
    };
  }
  return c;
}

double F_eval(const FamilySpec& spec, double t) {
  if (!support(spec).contains(t)) {
    throw DomainViolation("F_eval: t outside the support interval");
  }
  const double n = spec.degree;
  switch (spec.kind) {
    case FamilyKind::Laguerre: {
      const double a = spec.alpha;
      return (-t * t + 2.0 * a * t + 2.0 * t + 4.0 * n * t - a * a + 1.0) /
             (4.0 * t * t);
    }
    case FamilyKind::Jacobi: {
      const auto [x, y, z] = jacobi_aux(spec);
      const double d = t * t - 1.0;
      return (-z * t * t - 2.0 * (x - y) * t - 2.0 * x - 2.0 * y + z) /
             (4.0 * d * d);
    }
    case FamilyKind::Ultraspherical: {
      const double d = t * t - 1.0;
      const double a = spec.alpha;
      return (-ultra_leading(spec) * t * t +
              (1.0 + n + n * n + a + 2.0 * a * n)) /
             (d * d);
    }
  }
  return 0.0;
}

double j_eval(const FamilySpec& spec, double t) {
  require_jacobi_like(spec, "j_eval");
  if (spec.kind == FamilyKind::Jacobi) {
    const auto [x, y, z] = jacobi_aux(spec);
    return ((z * t + 3.0 * (x - y)) * t + (4.0 * x + 4.0 * y - z)) * t + (x - y);
  }
  return 4.0 * (ultra_leading(spec) * t * t * t - ultra_linear(spec) * t);
}

double discriminant(const FamilySpec& spec) {
  require_jacobi_like(spec, "discriminant");
  if (spec.kind == FamilyKind::Jacobi) {
    const auto [x, y, z] = jacobi_aux(spec);
    return 12.0 * (3.0 * x * x + 3.0 * y * y + z * z - 6.0 * x * y -
                   4.0 * x * z - 4.0 * y * z);
  }
  return 192.0 * ultra_leading(spec) * ultra_linear(spec);
}

NormalFormProfile critical_points(const FamilySpec& spec) {
  validate(spec, Purpose::Classification);
  NormalFormProfile profile;
  profile.family = spec;
  profile.support_interval = support(spec);

  if (spec.kind == FamilyKind::Laguerre) {
    const double a = spec.alpha;
    // Reported even when negative (outside the support); the sign drives the
    // Laguerre case split.
    profile.t0 = (a * a - 1.0) / (a + 2.0 * spec.degree + 1.0);
    return profile;
  }

  const auto aux = jacobi_aux(spec);
  profile.x_aux = aux.x;
  profile.y_aux = aux.y;
  profile.z_aux = aux.z;
  profile.t0 = (aux.y - aux.x) / aux.z;

  const double d = discriminant(spec);
  profile.discriminant = d;
  const double scale =
      12.0 * (3.0 * aux.x * aux.x + 3.0 * aux.y * aux.y + aux.z * aux.z +
              6.0 * std::abs(aux.x * aux.y) + 4.0 * std::abs(aux.x * aux.z) +
              4.0 * std::abs(aux.y * aux.z));
  if (d > kDegenerateDiscriminantTol * scale) {
    profile.discriminant_sign = 1;
  } else if (d < -kDegenerateDiscriminantTol * scale) {
    profile.discriminant_sign = -1;
  } else {
    profile.discriminant_sign = 0;
  }

  if (profile.discriminant_sign >= 0) {
    double t1, t2;
    if (spec.kind == FamilyKind::Jacobi) {
      const double sq =
          profile.discriminant_sign > 0 ? std::sqrt(std::max(d, 0.0)) : 0.0;
      t1 = (6.0 * (aux.y - aux.x) - sq) / (6.0 * aux.z);
      t2 = (6.0 * (aux.y - aux.x) + sq) / (6.0 * aux.z);
    } else {
      const double p = ultra_leading(spec);
      const double rad =
          profile.discriminant_sign > 0
              ? std::max((p - 2.0 * aux.x) / (3.0 * p), 0.0)
              : 0.0;
      t2 = std::sqrt(rad);
      t1 = -t2;
    }
    profile.t12 = {t1, t2};
    profile.t12_in_support = {profile.support_interval.contains(t1),
                              profile.support_interval.contains(t2)};
  }

  if (spec.kind == FamilyKind::Ultraspherical && profile.discriminant_sign > 0) {
    const double p = ultra_leading(spec);
    const double T2 = std::sqrt((p - 2.0 * aux.x) / p);
    profile.T12 = {-T2, T2};
  }
  return profile;
}

std::vector<double> j_roots_in_support(const FamilySpec& spec) {
  require_jacobi_like(spec, "j_roots_in_support");
  const auto aux = jacobi_aux(spec);
  if (!(aux.z > 0.0)) {
    throw DegenerateCubic("j_roots_in_support: z_aux <= 0, oscillation conditions violated");
  }
  const Interval sup = support(spec);
  std::vector<double> roots;

  if (spec.kind == FamilyKind::Ultraspherical) {
    // j = 4 t (P t^2 - c): roots 0 and +-T2 = +-sqrt(c/P) when c > 0.
    // A near-degenerate c puts +-T2 within the dedup gap of 0, collapsing
    // them the same way the discriminant classification would.
    roots.push_back(0.0);
    const double p = ultra_leading(spec);
    const double c = ultra_linear(spec);
    if (p > 0.0 && c > 0.0) {
      const double T2 = std::sqrt(c / p);
      if (sup.contains(T2)) {
        roots.push_back(-T2);
        roots.push_back(T2);
      }
    }
  } else {
    // Monic form of j: t^3 + p t^2 + q t + r, then depress with t = s - p/3.
    const double p = 3.0 * (aux.x - aux.y) / aux.z;
    const double q = (4.0 * aux.x + 4.0 * aux.y - aux.z) / aux.z;
    const double r = (aux.x - aux.y) / aux.z;
    const double shift = p / 3.0;
    const double da = q - p * p / 3.0;
    const double db = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
    for (double s : depressed_cubic_roots(da, db)) {
      double t = s - shift;
      // one Newton step on j for hygiene
      const double jd = j_derivative(aux, t);
      if (jd != 0.0) t -= j_eval(spec, t) / jd;
      if (sup.contains(t)) roots.push_back(t);
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> dedup;
  for (double t : roots) {
    if (!dedup.empty() && t - dedup.back() <= 1e-9) {
      dedup.back() = 0.5 * (dedup.back() + t);
    } else {
      dedup.push_back(t);
    }
  }
  return dedup;
}

std::optional<double> F_supremum(const FamilySpec& spec, Interval interval) {
  const Interval sup = support(spec);
  if (!(interval.lo < interval.hi) || interval.lo < sup.lo || interval.hi > sup.hi) {
    throw DomainViolation("F_supremum: interval not contained in the support");
  }

  std::vector<double> candidates;
  const bool laguerre = spec.kind == FamilyKind::Laguerre;

  // One-sided limits at the interval endpoints.
  if (interval.lo == sup.lo) {
    if (laguerre) {
      const double a2m1 = spec.alpha * spec.alpha - 1.0;
      candidates.push_back(a2m1 <= 0.0 ? kInf : -kInf);
    } else {
      candidates.push_back(jacobi_endpoint_limit(jacobi_aux(spec), false));
    }
  } else {
    candidates.push_back(F_eval(spec, interval.lo));
  }
  if (interval.hi == sup.hi) {
    if (laguerre) {
      candidates.push_back(-0.25);
    } else {
      candidates.push_back(jacobi_endpoint_limit(jacobi_aux(spec), true));
    }
  } else {
    candidates.push_back(F_eval(spec, interval.hi));
  }

  // Interior stationary points of F.
  if (laguerre) {
    const NormalFormProfile profile = critical_points(spec);
    if (profile.t0 && interval.contains(*profile.t0)) {
      candidates.push_back(F_eval(spec, *profile.t0));
    }
  } else {
    for (double t : j_roots_in_support(spec)) {
      if (interval.contains(t)) candidates.push_back(F_eval(spec, t));
    }
  }

  const double m = *std::max_element(candidates.begin(), candidates.end());
  if (m == kInf) return std::nullopt;
  return m;
}

}  // namespace orthozeros
