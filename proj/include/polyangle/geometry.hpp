#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace polyangle {

/// Apex position in the base-edge frame.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// The fixed triangle side, canonically (0,0) -> (length,0).
struct BaseEdge {
  double length = 1.0;
};

struct RegularNGon {
  int n = 4;
  double side = 1.0;

  friend bool operator==(const RegularNGon&, const RegularNGon&) = default;
};

/// Counter-clockwise convex polygon; edge `base_edge_index` runs from
/// vertices[i] to vertices[(i+1) % size] and becomes the base edge.
struct ConvexPolygon {
  std::vector<Point> vertices;
  std::size_t base_edge_index = 0;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;
};

/// The n -> infinity limit. Carries no geometry.
struct CircleLimit {
  friend bool operator==(const CircleLimit&, const CircleLimit&) = default;
};

using RegionSpec = std::variant<RegularNGon, ConvexPolygon, CircleLimit>;

bool is_prediction_only(const RegionSpec& spec) noexcept;

/// A convex polygon in the canonical frame: vertices[0] == (0,0),
/// vertices[1] == (base.length, 0), CCW order, every vertex has y >= 0.
class CanonicalPolygon {
 public:
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  BaseEdge base() const noexcept { return base_; }

 private:
  friend CanonicalPolygon build_region(const RegionSpec& spec);
  CanonicalPolygon(std::vector<Point> vertices, BaseEdge base)
      : vertices_(std::move(vertices)), base_(base) {}

  std::vector<Point> vertices_;
  BaseEdge base_;
};

/// Validates `spec` and re-frames it so its base edge is (0,0)->(d,0).
/// Throws NonConvexInput, DegenerateInput or PredictionOnlyShape.
CanonicalPolygon build_region(const RegionSpec& spec);

/// Shoelace area.
double area(const CanonicalPolygon& polygon);

/// Area centroid.
Point centroid(const CanonicalPolygon& polygon);

/// Closed-region membership; edges are tested with tolerance 1e-12 * d.
bool contains(const CanonicalPolygon& polygon, Point p);

struct BoundingBox {
  double xmin, ymin, xmax, ymax;
};

BoundingBox bounding_box(const CanonicalPolygon& polygon);

struct Triangle {
  Point a, b, c;

  double area() const noexcept;
};

/// Fan triangulation from vertex 0 with cumulative areas for sampling.
class Triangulation {
 public:
  explicit Triangulation(std::vector<Triangle> triangles);

  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  std::span<const double> cumulative_areas() const noexcept { return cumulative_; }
  double total_area() const noexcept { return cumulative_.back(); }

  /// Index of the triangle selected by `pick` in [0,1), proportional to area.
  std::size_t select(double pick) const noexcept;

  /// Maps three uniforms in [0,1) to a point: area-weighted triangle choice
  /// followed by the square-root barycentric map.
  Point point_at(double pick, double u, double v) const noexcept;

 private:
  std::vector<Triangle> triangles_;
  std::vector<double> cumulative_;
};

Triangulation triangulate(const CanonicalPolygon& polygon);

/// Square-root barycentric map of (u,v) in [0,1)^2 onto `t`.
Point barycentric_sample(const Triangle& t, double u, double v) noexcept;

/// Draws a uniform point over the triangulated region. `Rng` must provide
/// `double uniform()` returning values in [0,1).
template <typename Rng>
Point sample_uniform(const Triangulation& triangulation, Rng& rng) {
  const double pick = rng.uniform();
  const double u = rng.uniform();
  const double v = rng.uniform();
  return triangulation.point_at(pick, u, v);
}

}  // namespace polyangle
