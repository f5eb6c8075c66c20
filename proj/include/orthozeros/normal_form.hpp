#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "orthozeros/families.hpp"

namespace orthozeros {

/// Coefficients of a second-order equation x'' + g(t) x' + f(t) x = 0
/// on an open interval.
struct ODECoefficients {
  std::function<double(double)> g;
  std::function<double(double)> g_prime;
  std::function<double(double)> f;
  Interval domain;
};

/// Closed-form structure of the normal-form coefficient F(t) for one family:
/// auxiliary constants, critical points, and the discriminant of j'(t).
///
/// Conventions:
///  - Laguerre: only t0 is set (the stationary point of F, reported even when
///    it falls left of the support so consumers can test membership).
///  - Jacobi: x_aux = alpha^2-1, y_aux = beta^2-1,
///    z_aux = (alpha+beta+2n)(alpha+beta+2n+2); t0 is the inflection point of
///    the cubic j; t12 holds the stationary points of j when the discriminant
///    is nonnegative (a doubled point when it is treated as zero).
///  - Ultraspherical: additionally T12, the nonzero roots of j, when the
///    radicand is positive; T2 = t2 * sqrt(3).
struct NormalFormProfile {
  FamilySpec family;
  Interval support_interval;
  std::optional<double> x_aux, y_aux, z_aux;
  std::optional<double> t0;
  std::optional<std::array<double, 2>> t12;
  std::array<bool, 2> t12_in_support{false, false};
  std::optional<std::array<double, 2>> T12;
  std::optional<double> discriminant;
  /// Sign of the discriminant after the near-degenerate collapse: values with
  /// |D| <= 1e-8 * scale count as zero to keep floating-point noise from
  /// manufacturing tiny spurious intervals.
  int discriminant_sign = 0;
};

/// F(t) = f(t) - g(t)^2/4 - g'(t)/2, the coefficient of the normal form
/// y'' + F y = 0 obtained by the substitution y = x exp(1/2 int g), which
/// leaves the zeros of x unchanged.
double normal_form_generic(const ODECoefficients& coeffs, double t);

/// The defining differential-equation coefficients of a family member,
/// for cross-checking normal_form_generic against the closed forms.
ODECoefficients ode_coefficients(const FamilySpec& spec);

/// Closed-form F(t) of the family's normal form.
double F_eval(const FamilySpec& spec, double t);

/// The cubic numerator j(t) of F'(t) for Jacobi/ultraspherical.
/// F' = j / (2 (t^2-1)^3), so on (-1,1) sign F' = -sign j.
/// Throws UnsupportedFamily for Laguerre (use t0 from critical_points).
double j_eval(const FamilySpec& spec, double t);

/// Discriminant D of j'(t); D > 0 iff j has two distinct real stationary
/// points.  Throws UnsupportedFamily for Laguerre.
double discriminant(const FamilySpec& spec);

/// Closed-form critical structure of F for the family.
NormalFormProfile critical_points(const FamilySpec& spec);

/// Real roots of j inside the support interval, ascending, deduplicated.
/// These are the stationary points of F and the breakpoints of every
/// convexity partition.  Throws UnsupportedFamily for Laguerre and
/// DegenerateCubic when z_aux <= 0.
std::vector<double> j_roots_in_support(const FamilySpec& spec);

/// Supremum of F over an open subinterval of the support, from the
/// closed-form critical points and one-sided endpoint limits.  Absent when
/// the supremum is +infinity (e.g. Laguerre with |alpha| <= 1 as t -> 0+).
std::optional<double> F_supremum(const FamilySpec& spec, Interval interval);

}  // namespace orthozeros
