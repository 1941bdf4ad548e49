#include "polyangle/angle_kernel.hpp"

#include <algorithm>
#include <cmath>

#include "polyangle/errors.hpp"

namespace polyangle {
namespace {

double clamp_unit(double v) noexcept { return std::clamp(v, -1.0, 1.0); }

void reject_base_vertex(Point p, double d) {
  const double tol = 1e-14 * d;
  if (std::hypot(p.x, p.y) <= tol) {
    throw DegenerateApex("apex coincides with base vertex (0,0)");
  }
  if (std::hypot(p.x - d, p.y) <= tol) {
    throw DegenerateApex("apex coincides with base vertex (d,0)");
  }
}

/// Collinear limits for an apex on the base line.
AngleTriple on_base_line(double x, double d) noexcept {
  if (x > d) return {180.0, 0.0, 0.0};
  if (x < 0.0) return {0.0, 180.0, 0.0};
  return {0.0, 0.0, 180.0};
}

}  // namespace

SideLengths side_lengths(Point p, BaseEdge base) noexcept {
  const double dx = p.x - base.length;
  return {std::sqrt(p.x * p.x + p.y * p.y), std::sqrt(dx * dx + p.y * p.y), base.length};
}

AngleTriple angles_at(Point p, BaseEdge base) {
  const double d = base.length;
  reject_base_vertex(p, d);
  if (p.y == 0.0) return on_base_line(p.x, d);

  const auto [a, b, c] = side_lengths(p, base);
  const double a2 = a * a;
  const double b2 = b * b;
  const double c2 = c * c;
  const double twice_area = c * std::abs(p.y);

  const double cos_alpha = clamp_unit((b2 + c2 - a2) / (2.0 * b * c));
  const double cos_beta = clamp_unit((a2 + c2 - b2) / (2.0 * a * c));
  const double cos_gamma = clamp_unit((a2 + b2 - c2) / (2.0 * a * b));

  return {to_degrees(std::atan2(twice_area / (b * c), cos_alpha)),
          to_degrees(std::atan2(twice_area / (a * c), cos_beta)),
          to_degrees(std::atan2(twice_area / (a * b), cos_gamma))};
}

AngleTriple law_of_cosines_angles(Point p, BaseEdge base) {
  const double d = base.length;
  reject_base_vertex(p, d);

  const double x = p.x;
  const double y = p.y;
  const double a = std::sqrt(x * x + y * y);
  const double b = std::sqrt((x - d) * (x - d) + y * y);
  const double c = d;

  const double alpha = std::acos(clamp_unit((b * b + c * c - a * a) / (2 * b * c)));
  const double beta = std::acos(clamp_unit((a * a + c * c - b * b) / (2 * a * c)));
  const double gamma = std::acos(clamp_unit((a * a + b * b - c * c) / (2 * a * b)));
  return {to_degrees(alpha), to_degrees(beta), to_degrees(gamma)};
}

double beta_polar_check(Point p, BaseEdge base) {
  if (std::hypot(p.x, p.y) <= 1e-14 * base.length) {
    throw DegenerateApex("polar angle undefined at the origin");
  }
  return to_degrees(std::atan2(p.y, p.x));
}

}  // namespace polyangle
