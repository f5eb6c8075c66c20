#pragma once

#include <utility>
#include <vector>

#include "orthozeros/families.hpp"

namespace orthozeros {

/// The n zeros of a family member, ascending, with consecutive differences.
struct ZeroSet {
  FamilySpec spec;
  std::vector<double> zeros;               // strictly increasing, inside support
  std::vector<double> spacings;            // zeros[k+1] - zeros[k]
  std::vector<double> second_differences;  // spacings[k+1] - spacings[k]
};

/// Closed-form bounds on the smallest Laguerre zero x_1:
/// lower (alpha+1)/n, and the two classical upper bounds.
struct FirstZeroBounds {
  double lower = 0.0;    // (alpha+1)/n
  double upper_a = 0.0;  // (alpha+1)(alpha+2)/(alpha+n+1)
  double upper_b = 0.0;  // (alpha+1)(alpha+3)/(alpha+2n+1)
  /// t0 < min(upper_a, upper_b): whether the stationary point of F sits
  /// below both known upper bounds for x_1.
  bool t0_below_upper_bounds = false;
};

/// All n zeros: symmetric tridiagonal eigenvalues (Sturm bisection) seeded
/// into Newton refinement on the recurrence-evaluated polynomial, with a
/// duplicate guard.  Throws ConvergenceFailure naming the offending index.
ZeroSet compute_zeros(const FamilySpec& spec);

/// (spacings, second differences) of an existing zero set.
/// Throws DegreeTooSmall for n < 2.
std::pair<std::vector<double>, std::vector<double>> spacing_profile(const ZeroSet& zs);

/// The closed-form first-zero bounds (Laguerre only).
FirstZeroBounds first_zero_bounds(const FamilySpec& spec);

}  // namespace orthozeros
