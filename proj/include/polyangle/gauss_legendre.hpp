#pragma once

#include <vector>

namespace polyangle {

/// Gauss-Legendre rule on [0,1]; weights sum to 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int order() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Nodes by Newton iteration on P_n from Chebyshev initial guesses.
/// Valid for order >= 1; the estimators restrict it to [2, 32].
GaussRule gauss_legendre(int order);

}  // namespace polyangle
