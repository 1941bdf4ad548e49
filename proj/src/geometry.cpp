#include "polyangle/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "polyangle/errors.hpp"

namespace polyangle {
namespace {

double cross(Point o, Point a, Point b) noexcept {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double signed_area(const std::vector<Point>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

void validate_convex(const std::vector<Point>& v) {
  if (v.size() < 3) {
    throw DegenerateInput("polygon needs at least 3 vertices, got " + std::to_string(v.size()));
  }
  double extent = 0.0;
  for (const Point& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DegenerateInput("polygon has a non-finite vertex coordinate");
    }
    extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) {
      throw DegenerateInput("polygon has a zero-length edge at vertex " + std::to_string(i));
    }
  }
  const double a = signed_area(v);
  if (!(std::abs(a) > 1e-14 * extent * extent)) {
    throw DegenerateInput("polygon has zero area");
  }
  if (a < 0.0) {
    throw NonConvexInput("polygon vertices are clockwise; counter-clockwise order is required");
  }
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % n];
    const Point& r = v[(i + 2) % n];
    const double c = cross(p, q, r);
    if (!(c > 0.0)) {
      std::ostringstream msg;
      msg << "polygon is not strictly convex at vertex " << (i + 1) % n;
      throw NonConvexInput(msg.str());
    }
    const double dot = (q.x - p.x) * (r.x - q.x) + (q.y - p.y) * (r.y - q.y);
    turning += std::atan2(c, dot);
  }
  // All left turns but wound more than once: a star polygon.
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
    throw NonConvexInput("polygon boundary winds more than once");
  }
}

std::vector<Point> regular_ngon_vertices(int n, double side) {
  const double half_step = std::numbers::pi / n;
  const double cx = 0.5 * side;
  const double cy = side / (2.0 * std::tan(half_step));
  const double radius = side / (2.0 * std::sin(half_step));

  std::vector<Point> v(static_cast<std::size_t>(n));
  v[0] = {0.0, 0.0};
  v[1] = {side, 0.0};
  // Vertex k mirrors vertex n+1-k about x = side/2; compute one half and
  // reflect so the polygon is exactly symmetric.
  for (int k = 2; 2 * k <= n + 1; ++k) {
    const double theta = -0.5 * std::numbers::pi - half_step + 2.0 * half_step * k;
    const Point p{cx + radius * std::cos(theta), cy + radius * std::sin(theta)};
    const int mirror = n + 1 - k;
    if (mirror == k) {
      v[static_cast<std::size_t>(k)] = {cx, p.y};
    } else {
      v[static_cast<std::size_t>(k)] = p;
      v[static_cast<std::size_t>(mirror)] = {side - p.x, p.y};
    }
  }
  return v;
}

std::vector<Point> canonicalize(const std::vector<Point>& v, std::size_t base, double& length) {
  const std::size_t n = v.size();
  const Point origin = v[base];
  const Point end = v[(base + 1) % n];
  const double ex = end.x - origin.x;
  const double ey = end.y - origin.y;
  length = std::hypot(ex, ey);
  const double ux = ex / length;
  const double uy = ey / length;

  std::vector<Point> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Point& p = v[(base + k) % n];
    const double dx = p.x - origin.x;
    const double dy = p.y - origin.y;
    double y = -uy * dx + ux * dy;
    if (y < 0.0 && y > -1e-12 * length) y = 0.0;
    out[k] = {ux * dx + uy * dy, y};
  }
  out[0] = {0.0, 0.0};
  out[1] = {length, 0.0};
  return out;
}

}  // namespace

bool is_prediction_only(const RegionSpec& spec) noexcept {
  return std::holds_alternative<CircleLimit>(spec);
}

CanonicalPolygon build_region(const RegionSpec& spec) {
  if (const auto* ngon = std::get_if<RegularNGon>(&spec)) {
    if (ngon->n < 3) {
      throw DegenerateInput("regular polygon needs n >= 3, got " + std::to_string(ngon->n));
    }
    if (!(ngon->side > 0.0) || !std::isfinite(ngon->side)) {
      throw DegenerateInput("regular polygon side must be positive and finite");
    }
    auto vertices = regular_ngon_vertices(ngon->n, ngon->side);
    validate_convex(vertices);
    return CanonicalPolygon(std::move(vertices), BaseEdge{ngon->side});
  }
  if (const auto* poly = std::get_if<ConvexPolygon>(&spec)) {
    validate_convex(poly->vertices);
    if (poly->base_edge_index >= poly->vertices.size()) {
      throw DegenerateInput("base edge index " + std::to_string(poly->base_edge_index) +
                            " out of range for " + std::to_string(poly->vertices.size()) +
                            " vertices");
    }
    double length = 0.0;
    auto vertices = canonicalize(poly->vertices, poly->base_edge_index, length);
    return CanonicalPolygon(std::move(vertices), BaseEdge{length});
  }
  throw PredictionOnlyShape("the circle limit has no geometry; it supports prediction only");
}

double area(const CanonicalPolygon& polygon) { return signed_area(polygon.vertices()); }

Point centroid(const CanonicalPolygon& polygon) {
  const auto& v = polygon.vertices();
  double cx = 0.0;
  double cy = 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    const double w = p.x * q.y - q.x * p.y;
    twice += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (3.0 * twice), cy / (3.0 * twice)};
}

bool contains(const CanonicalPolygon& polygon, Point p) {
  const auto& v = polygon.vertices();
  const double tol = 1e-12 * polygon.base().length;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    const double edge = std::hypot(b.x - a.x, b.y - a.y);
    if (cross(a, b, p) / edge < -tol) return false;
  }
  return true;
}

BoundingBox bounding_box(const CanonicalPolygon& polygon) {
  BoundingBox box{polygon[0].x, polygon[0].y, polygon[0].x, polygon[0].y};
  for (const Point& p : polygon.vertices()) {
    box.xmin = std::min(box.xmin, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.xmax = std::max(box.xmax, p.x);
    box.ymax = std::max(box.ymax, p.y);
  }
  return box;
}

double Triangle::area() const noexcept { return 0.5 * cross(a, b, c); }

Triangulation::Triangulation(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
  if (triangles_.empty()) throw DegenerateInput("triangulation is empty");
  cumulative_.reserve(triangles_.size());
  double running = 0.0;
  for (const Triangle& t : triangles_) {
    const double a = t.area();
    if (!(a > 0.0)) throw DegenerateInput("triangulation contains a degenerate triangle");
    running += a;
    cumulative_.push_back(running);
  }
}

std::size_t Triangulation::select(double pick) const noexcept {
  const double target = pick * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  const auto index = static_cast<std::size_t>(it - cumulative_.begin());
  return std::min(index, cumulative_.size() - 1);
}

Point Triangulation::point_at(double pick, double u, double v) const noexcept {
  return barycentric_sample(triangles_[select(pick)], u, v);
}

Point barycentric_sample(const Triangle& t, double u, double v) noexcept {
  const double su = std::sqrt(u);
  const double wa = 1.0 - su;
  const double wb = su * (1.0 - v);
  const double wc = su * v;
  return {wa * t.a.x + wb * t.b.x + wc * t.c.x, wa * t.a.y + wb * t.b.y + wc * t.c.y};
}

Triangulation triangulate(const CanonicalPolygon& polygon) {
  std::vector<Triangle> triangles;
  triangles.reserve(polygon.size() - 2);
  for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
    triangles.push_back({polygon[0], polygon[i], polygon[i + 1]});
  }
  return Triangulation(std::move(triangles));
}

}  // namespace polyangle
