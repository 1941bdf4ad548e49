#include "polyangle/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "polyangle/errors.hpp"

namespace polyangle {
namespace {

void require_polygon(int n) {
  if (n < 3) throw InvalidN("a polygon needs n >= 3 sides, got " + std::to_string(n));
}

}  // namespace

Prediction predict(std::optional<int> n) {
  Prediction p;
  p.n = n;
  if (!n) {
    p.exact_base = {90, 1};
    p.exact_gamma = {0, 1};
  } else {
    require_polygon(*n);
    p.exact_base = {(static_cast<long long>(*n) - 2) * 90, *n};
    p.exact_gamma = {360, *n};
  }
  const double base = p.exact_base.value();
  p.mean = {base, base, p.exact_gamma.value()};
  return p;
}

double half_interior_angle(int n) {
  require_polygon(n);
  return static_cast<double>((static_cast<long long>(n) - 2) * 90) / static_cast<double>(n);
}

bool symmetry_check(const RegionSpec& region) { return symmetry_check(build_region(region)); }

bool symmetry_check(const CanonicalPolygon& polygon) {
  const double d = polygon.base().length;
  const double tol = 1e-9 * d;
  const auto& v = polygon.vertices();
  // Every reflected vertex must match some vertex; sizes are equal, and a
  // strictly convex polygon has no repeated vertices, so this is set equality.
  return std::all_of(v.begin(), v.end(), [&](const Point& p) {
    const Point mirrored{d - p.x, p.y};
    return std::any_of(v.begin(), v.end(), [&](const Point& q) {
      return std::abs(q.x - mirrored.x) <= tol && std::abs(q.y - mirrored.y) <= tol;
    });
  });
}

}  // namespace polyangle
