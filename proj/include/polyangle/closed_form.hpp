#pragma once

#include <optional>

#include "polyangle/angle_kernel.hpp"
#include "polyangle/geometry.hpp"

namespace polyangle {

enum class Exactness { conjectured_exact };

/// Degrees as an exact fraction num/den.
struct RationalDegrees {
  long long num = 0;
  long long den = 1;

  double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

/// Predicted mean angles for a regular n-gon; n == nullopt is the circle.
/// `exact_*` hold the unrounded values; `mean` is their correctly rounded
/// double image.
struct Prediction {
  AngleTriple mean;
  RationalDegrees exact_base;   // alpha == beta
  RationalDegrees exact_gamma;
  std::optional<int> n;
  Exactness exactness = Exactness::conjectured_exact;
};

/// alpha = beta = (n-2)/(2n) * 180, gamma = 360/n; the circle gives (90,90,0).
/// Throws InvalidN for n < 3.
Prediction predict(std::optional<int> n);

/// Half the interior angle, (n-2)*90/n. Throws InvalidN for n < 3.
double half_interior_angle(int n);

/// True iff the canonical polygon maps onto itself under x -> d - x
/// (vertex sets equal within 1e-9*d). When true, <alpha> == <beta>.
bool symmetry_check(const RegionSpec& region);
bool symmetry_check(const CanonicalPolygon& polygon);

}  // namespace polyangle
