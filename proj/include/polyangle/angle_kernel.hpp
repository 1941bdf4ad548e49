#pragma once

#include "polyangle/geometry.hpp"

namespace polyangle {

/// Side lengths of the triangle formed by the base edge and an apex.
/// `a` runs to (0,0), `b` to (d,0), `c` is the base itself.
struct SideLengths {
  double a, b, c;
};

/// Angles in degrees. alpha sits at (d,0) between sides b and c, beta at
/// (0,0) between a and c, gamma at the apex.
struct AngleTriple {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double sum() const noexcept { return alpha + beta + gamma; }

  friend bool operator==(const AngleTriple&, const AngleTriple&) = default;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

constexpr double to_degrees(double radians) noexcept { return radians * 180.0 / kPi; }

SideLengths side_lengths(Point p, BaseEdge base) noexcept;

/// Pointwise triangle angles at apex `p`.
///
/// Each angle takes its cosine from the law of cosines (clamped into
/// [-1,1]) and its sine from the doubled triangle area d*|y|, then
/// resolves the angle with atan2. This equals arccos(clamp(cos)) but keeps
/// full precision for needle triangles near the base line, where arccos
/// loses about half the digits.
///
/// Apexes on the base line (y == 0) return the collinear limits:
/// (0,0,180) strictly between the base vertices, (180,0,0) beyond (d,0)
/// and (0,180,0) beyond (0,0). Throws DegenerateApex when `p` is within
/// 1e-14*d of a base vertex.
AngleTriple angles_at(Point p, BaseEdge base);

/// The literal law-of-cosines evaluation, arccos(clamp((b^2+c^2-a^2)/(2bc)))
/// and friends, in the operation order of the original grid listing. Used by
/// the paper-exact grid so the reproduction sums the same values.
AngleTriple law_of_cosines_angles(Point p, BaseEdge base);

/// Polar angle of `p` about the origin, atan2(y, x), in degrees. An
/// independent route to beta. Throws DegenerateApex at the origin.
double beta_polar_check(Point p, BaseEdge base);

}  // namespace polyangle
