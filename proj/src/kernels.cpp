#include <omp.h>

#include <algorithm>

#include "internal.hpp"
#include "polyangle/errors.hpp"
#include "polyangle/rng.hpp"

namespace polyangle {
namespace {

int g_max_workers = 0;

}  // namespace

void set_max_workers(int workers) { g_max_workers = workers > 0 ? workers : 0; }

int max_workers() { return detail::worker_count(); }

std::string method_name(Method method) {
  switch (method) {
    case Method::grid_paper_exact: return "grid:paper_exact";
    case Method::grid_midpoint: return "grid:midpoint";
    case Method::monte_carlo: return "mc";
    case Method::quadrature: return "quad";
    case Method::prediction: return "predict";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::grid_paper_exact, Method::grid_midpoint, Method::monte_carlo,
                   Method::quadrature, Method::prediction}) {
    if (method_name(m) == name) return m;
  }
  throw ParseError("unknown method '" + name + "'", name);
}

void validate(const GridConfig& cfg) {
  if (cfg.resolution < 1) {
    throw ParseError("grid resolution must be >= 1, got " + std::to_string(cfg.resolution),
                     std::to_string(cfg.resolution));
  }
}

void validate(const McConfig& cfg) {
  if (cfg.samples < 1) throw ParseError("sample count must be >= 1", "0");
  if (cfg.chunk_size < 1) throw ParseError("chunk size must be >= 1", "0");
}

void validate(const QuadratureConfig& cfg) {
  if (cfg.gauss_order < 2 || cfg.gauss_order > 32) {
    throw ParseError("Gauss order must be in [2, 32], got " + std::to_string(cfg.gauss_order),
                     std::to_string(cfg.gauss_order));
  }
  if (cfg.refinement_levels < 0 || cfg.refinement_levels > 8) {
    throw ParseError(
        "refinement levels must be in [0, 8], got " + std::to_string(cfg.refinement_levels),
        std::to_string(cfg.refinement_levels));
  }
}

namespace detail {

int worker_count() { return g_max_workers > 0 ? g_max_workers : omp_get_max_threads(); }

AngleTriple scaled(const AngleTriple& t, double factor) noexcept {
  return {t.alpha * factor, t.beta * factor, t.gamma * factor};
}

MomentAccumulator mc_chunk(const Triangulation& triangulation, BaseEdge base, std::uint64_t seed,
                           std::uint64_t chunk_index, std::uint64_t count) {
  CounterRng rng(seed, chunk_index);
  MomentAccumulator acc;
  for (std::uint64_t i = 0; i < count; ++i) {
    acc.add(angles_at(sample_uniform(triangulation, rng), base));
  }
  return acc;
}

Triangle subtriangle(const Triangle& t, std::uint64_t index, int levels) noexcept {
  Triangle cur = t;
  for (int level = levels - 1; level >= 0; --level) {
    const auto digit = (index >> (2 * level)) & 3U;
    const Point ab{0.5 * (cur.a.x + cur.b.x), 0.5 * (cur.a.y + cur.b.y)};
    const Point bc{0.5 * (cur.b.x + cur.c.x), 0.5 * (cur.b.y + cur.c.y)};
    const Point ca{0.5 * (cur.c.x + cur.a.x), 0.5 * (cur.c.y + cur.a.y)};
    switch (digit) {
      case 0: cur = {cur.a, ab, ca}; break;
      case 1: cur = {ab, cur.b, bc}; break;
      case 2: cur = {ca, bc, cur.c}; break;
      default: cur = {bc, ca, ab}; break;
    }
  }
  return cur;
}

AngleTriple integrate_triangle(const Triangle& t, BaseEdge base, const GaussRule& rule) {
  // Collapse the Duffy map onto a base vertex: the angles there depend on
  // direction only, which the collapsed coordinates resolve smoothly.
  const Point left{0.0, 0.0};
  const Point right{base.length, 0.0};
  const auto is_base_vertex = [&](const Point& p) { return p == left || p == right; };
  Triangle tri = t;
  if (is_base_vertex(t.b)) {
    tri = {t.b, t.c, t.a};
  } else if (is_base_vertex(t.c)) {
    tri = {t.c, t.a, t.b};
  }

  const double ux = tri.b.x - tri.a.x;
  const double uy = tri.b.y - tri.a.y;
  const double vx = tri.c.x - tri.a.x;
  const double vy = tri.c.y - tri.a.y;
  const double twice_area = ux * vy - uy * vx;

  AngleTriple sum;
  const int n = rule.order();
  for (int i = 0; i < n; ++i) {
    const double s = rule.nodes[i];
    AngleTriple row;
    for (int j = 0; j < n; ++j) {
      const double t1 = rule.nodes[j];
      const double dx = (1.0 - t1) * ux + t1 * vx;
      const double dy = (1.0 - t1) * uy + t1 * vy;
      const AngleTriple f = angles_at({tri.a.x + s * dx, tri.a.y + s * dy}, base);
      const double w = rule.weights[j];
      row.alpha += w * f.alpha;
      row.beta += w * f.beta;
      row.gamma += w * f.gamma;
    }
    const double w = rule.weights[i] * s * twice_area;
    sum.alpha += w * row.alpha;
    sum.beta += w * row.beta;
    sum.gamma += w * row.gamma;
  }
  return sum;
}

}  // namespace detail
}  // namespace polyangle
