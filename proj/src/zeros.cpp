#include "orthozeros/zeros.hpp"

#include <cmath>
#include <string>

#include "orthozeros/normal_form.hpp"
#include "tridiagonal.hpp"

namespace orthozeros {

namespace {

constexpr int kMaxNewtonIterations = 50;
constexpr double kStepTolerance = 1e-14;
constexpr double kDuplicateTolerance = 1e-12;
constexpr double kResidualTolerance = 1e-10;

// Newton until the step drops below tolerance or the iteration cap; at large
// degree the step can dither at the recurrence's rounding floor, so the cap
// is a stop condition and the residual check afterwards is the arbiter.
double newton_polish(const FamilySpec& spec, double seed, const Interval& sup) {
  double x = seed;
  for (int iter = 0; iter < kMaxNewtonIterations; ++iter) {
    const EvalResult e = evaluate(spec, x);
    if (e.derivative == 0.0) break;  // simple zeros: only possible off-basin
    double step = e.value / e.derivative;
    double next = x - step;
    // Eigenvalue seeds are already inside the bracket; halve the rare step
    // that would leave the support.
    while (!sup.contains(next) && std::abs(step) > 1e-300) {
      step *= 0.5;
      next = x - step;
    }
    x = next;
    if (std::abs(step) <= kStepTolerance * std::max(1.0, std::abs(x))) {
      break;
    }
  }
  return x;
}

}  // namespace

ZeroSet compute_zeros(const FamilySpec& spec) {
  validate(spec, Purpose::ZeroComputation);
  const RecurrenceCoefficients rc = recurrence_coefficients(spec);
  const std::vector<double> seeds =
      detail::tridiagonal_eigenvalues(rc.diagonal, rc.offdiagonal);
  const Interval sup = support(spec);

  ZeroSet zs;
  zs.spec = spec;
  zs.zeros.reserve(seeds.size());
  for (double seed : seeds) {
    zs.zeros.push_back(newton_polish(spec, seed, sup));
  }

  for (std::size_t k = 0; k < zs.zeros.size(); ++k) {
    const double x = zs.zeros[k];
    if (!sup.contains(x)) {
      throw ConvergenceFailure("compute_zeros: zero #" + std::to_string(k + 1) +
                               " escaped the support interval");
    }
    if (k > 0 &&
        zs.zeros[k] - zs.zeros[k - 1] <=
            kDuplicateTolerance * std::max(1.0, std::abs(x))) {
      throw ConvergenceFailure("compute_zeros: zeros #" + std::to_string(k) +
                               " and #" + std::to_string(k + 1) +
                               " coincide; zeros of these families are simple");
    }
    const EvalResult e = evaluate(spec, x);
    if (std::abs(e.value) >
        kResidualTolerance * std::abs(e.derivative) * std::max(1.0, std::abs(x))) {
      throw ConvergenceFailure("compute_zeros: residual bound failed at zero #" +
                               std::to_string(k + 1));
    }
  }

  if (zs.zeros.size() >= 2) {
    zs.spacings.resize(zs.zeros.size() - 1);
    for (std::size_t k = 0; k + 1 < zs.zeros.size(); ++k) {
      zs.spacings[k] = zs.zeros[k + 1] - zs.zeros[k];
    }
  }
  if (zs.spacings.size() >= 2) {
    zs.second_differences.resize(zs.spacings.size() - 1);
    for (std::size_t k = 0; k + 1 < zs.spacings.size(); ++k) {
      zs.second_differences[k] = zs.spacings[k + 1] - zs.spacings[k];
    }
  }
  return zs;
}

std::pair<std::vector<double>, std::vector<double>> spacing_profile(const ZeroSet& zs) {
  if (zs.zeros.size() < 2) {
    throw DegreeTooSmall("spacing_profile: needs n >= 2 for spacings");
  }
  return {zs.spacings, zs.second_differences};
}

FirstZeroBounds first_zero_bounds(const FamilySpec& spec) {
  if (spec.kind != FamilyKind::Laguerre) {
    throw UnsupportedFamily("first_zero_bounds is defined for laguerre only");
  }
  validate(spec, Purpose::ZeroComputation);
  const double a = spec.alpha;
  const double n = spec.degree;
  FirstZeroBounds b;
  b.lower = (a + 1.0) / n;
  b.upper_a = (a + 1.0) * (a + 2.0) / (a + n + 1.0);
  b.upper_b = (a + 1.0) * (a + 3.0) / (a + 2.0 * n + 1.0);
  const double t0 = (a * a - 1.0) / (a + 2.0 * n + 1.0);
  b.t0_below_upper_bounds = t0 < std::min(b.upper_a, b.upper_b);
  return b;
}

}  // namespace orthozeros
