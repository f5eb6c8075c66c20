#pragma once

#include <string>
#include <vector>

#include "orthozeros/errors.hpp"

namespace orthozeros {

enum class FamilyKind { Laguerre, Jacobi, Ultraspherical };

/// What a spec is being validated for.  Zero computation needs the
/// orthogonality regime (all zeros real and simple, inside the support
/// interval); convexity classification needs the oscillation conditions.
enum class Purpose { ZeroComputation, Classification };

std::string to_string(FamilyKind kind);

/// One member of a classical orthogonal polynomial family.
///
/// Laguerre L_n^alpha on (0, inf); Jacobi P_n^(alpha,beta) on (-1, 1);
/// ultraspherical = Jacobi with beta == alpha, kept as its own kind because
/// its closed forms are simpler and tested independently.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Laguerre;
  double alpha = 0.0;
  double beta = 0.0;  // meaningful for Jacobi only
  int degree = 1;

  static FamilySpec laguerre(double alpha, int degree);
  static FamilySpec jacobi(double alpha, double beta, int degree);
  static FamilySpec ultraspherical(double alpha, int degree);

  /// beta for Jacobi, alpha for Ultraspherical; not meaningful for Laguerre.
  double effective_beta() const {
    return kind == FamilyKind::Jacobi ? beta : alpha;
  }

  bool operator==(const FamilySpec&) const = default;
};

/// Open interval (lo, hi); hi may be +infinity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double t) const { return t > lo && t < hi; }
  bool operator==(const Interval&) const = default;
};

/// The open support interval: (0, inf) for Laguerre, (-1, 1) otherwise.
Interval support(const FamilySpec& spec);

/// Value and first derivative of p_n at one point.
struct EvalResult {
  double value = 0.0;
  double derivative = 0.0;
};

/// Symmetric tridiagonal (Jacobi-matrix) representation of the three-term
/// recurrence; its eigenvalues are the n zeros of p_n.
struct RecurrenceCoefficients {
  std::vector<double> diagonal;     // n entries
  std::vector<double> offdiagonal;  // n-1 entries, strictly positive
};

/// Checks the admissibility conditions for the stated purpose and returns
/// the spec unchanged.  Throws ParameterOutOfRange naming the failed
/// inequality, DegreeNonPositive, or Overflow (caps n <= 200,
/// |alpha|,|beta| <= 30, beyond which double recurrences lose accuracy).
const FamilySpec& validate(const FamilySpec& spec, Purpose purpose);

/// Evaluates p_n(t) and p_n'(t) by forward three-term recurrence in the
/// conventional normalization (Laguerre L_n^alpha, Jacobi P_n^(alpha,beta)).
EvalResult evaluate(const FamilySpec& spec, double t);

/// Jacobi-matrix coefficients whose eigenvalues are the zeros of p_n.
RecurrenceCoefficients recurrence_coefficients(const FamilySpec& spec);

}  // namespace orthozeros
