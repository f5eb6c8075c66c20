#pragma once

#include <vector>

namespace orthozeros::detail {

/// All eigenvalues of the symmetric tridiagonal matrix with the given
/// diagonal (n entries) and off-diagonal (n-1 entries), ascending.
/// Bisection on Sturm sequence counts: deterministic and globally ordered,
/// which is what the zero pipeline needs from its seeds.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diagonal,
                                            const std::vector<double>& offdiagonal);

}  // namespace orthozeros::detail
