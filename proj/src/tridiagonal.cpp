#include "tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orthozeros::detail {

namespace {

// Number of eigenvalues strictly below x, from the signs of the LDL^T
// pivots (Sturm count).  Zero pivots are nudged to -pivmin, the classic
// Barth-Martin-Wilkinson safeguard.
int sturm_count_below(const std::vector<double>& d, const std::vector<double>& e2,
                      double pivmin, double x) {
  int count = 0;
  double q = d[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - x - e2[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diagonal,
                                            const std::vector<double>& offdiagonal) {
  const std::size_t n = diagonal.size();
  if (n == 0) return {};
  if (n == 1) return {diagonal[0]};

  std::vector<double> e2(n - 1);
  double e2max = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e2[i] = offdiagonal[i] * offdiagonal[i];
    e2max = std::max(e2max, e2[i]);
  }
  const double pivmin =
      std::max(e2max, 1.0) * std::numeric_limits<double>::min() /
      std::numeric_limits<double>::epsilon();

  // Gershgorin bounds.
  double lo = diagonal[0], hi = diagonal[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(offdiagonal[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(offdiagonal[i]) : 0.0);
    lo = std::min(lo, diagonal[i] - r);
    hi = std::max(hi, diagonal[i] + r);
  }
  const double pad = std::numeric_limits<double>::epsilon() *
                     std::max({std::abs(lo), std::abs(hi), 1.0});
  lo -= 2.0 * pad;
  hi += 2.0 * pad;

  std::vector<double> eigenvalues(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 128; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;  // interval at rounding resolution
      if (sturm_count_below(diagonal, e2, pivmin, mid) <= static_cast<int>(k)) {
        a = mid;
      } else {
        b = mid;
      }
      if (b - a <=
          2.0 * std::numeric_limits<double>::epsilon() *
              std::max({std::abs(a), std::abs(b), 1.0})) {
        break;
      }
    }
    eigenvalues[k] = 0.5 * (a + b);
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

}  // namespace orthozeros::detail
