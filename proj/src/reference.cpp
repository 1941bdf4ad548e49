// Single-threaded estimators written as plain loops. They share the
// pointwise kernels with the parallel drivers but not the blocking or the
// reduction order, so agreement is checked to a tolerance, not bitwise
// (paper-exact grid excepted: both use the listing's naive order).

#include <cmath>

#include "internal.hpp"
#include "polyangle/errors.hpp"
#include "polyangle/rng.hpp"
#include "polyangle/summation.hpp"

namespace polyangle::reference {
namespace {

void refine(const Triangle& t, int levels, BaseEdge base, const GaussRule& rule,
            CompensatedSum (&sums)[3]) {
  if (levels == 0) {
    const AngleTriple v = detail::integrate_triangle(t, base, rule);
    sums[0] += v.alpha;
    sums[1] += v.beta;
    sums[2] += v.gamma;
    return;
  }
  const Point ab{0.5 * (t.a.x + t.b.x), 0.5 * (t.a.y + t.b.y)};
  const Point bc{0.5 * (t.b.x + t.c.x), 0.5 * (t.b.y + t.c.y)};
  const Point ca{0.5 * (t.c.x + t.a.x), 0.5 * (t.c.y + t.a.y)};
  refine({t.a, ab, ca}, levels - 1, base, rule, sums);
  refine({ab, t.b, bc}, levels - 1, base, rule, sums);
  refine({ca, bc, t.c}, levels - 1, base, rule, sums);
  refine({bc, ca, ab}, levels - 1, base, rule, sums);
}

AngleTriple integrate(const CanonicalPolygon& polygon, const GaussRule& rule, int levels) {
  CompensatedSum sums[3];
  const Triangulation triangulation = triangulate(polygon);
  for (const Triangle& t : triangulation.triangles()) {
    refine(t, levels, polygon.base(), rule, sums);
  }
  const double a = area(polygon);
  return {sums[0].value() / a, sums[1].value() / a, sums[2].value() / a};
}

}  // namespace

EstimateResult grid_estimate(const RegionSpec& region, const GridConfig& cfg) {
  validate(cfg);
  const detail::Stopwatch clock;
  const CanonicalPolygon polygon = build_region(region);
  const BoundingBox box = bounding_box(polygon);
  const int n = cfg.resolution;
  const bool naive = cfg.mode == GridMode::paper_exact;

  double plain[3] = {0.0, 0.0, 0.0};
  CompensatedSum compensated[3];
  std::uint64_t count = 0;
  for (int i = 1; i <= n; ++i) {
    const double x = detail::lattice(box.xmin, box.xmax - box.xmin, i, n, cfg.mode);
    for (int j = 1; j <= n; ++j) {
      const Point p{x, detail::lattice(box.ymin, box.ymax - box.ymin, j, n, cfg.mode)};
      if (!contains(polygon, p)) continue;
      const AngleTriple v = detail::grid_angles(p, polygon.base(), cfg.mode);
      if (naive) {
        plain[0] += v.alpha;
        plain[1] += v.beta;
        plain[2] += v.gamma;
      } else {
        compensated[0] += v.alpha;
        compensated[1] += v.beta;
        compensated[2] += v.gamma;
      }
      ++count;
    }
  }
  if (count == 0) throw EmptyGrid("no grid point falls inside the region");
  const auto total = static_cast<double>(count);

  EstimateResult result;
  if (naive) {
    result.mean = {plain[0] / total, plain[1] / total, plain[2] / total};
  } else {
    result.mean = {compensated[0].value() / total, compensated[1].value() / total,
                   compensated[2].value() / total};
  }
  result.method = naive ? Method::grid_paper_exact : Method::grid_midpoint;
  result.region = region;
  result.evaluations = count;
  result.wall_time = clock.seconds();
  return result;
}

EstimateResult mc_estimate(const RegionSpec& region, const McConfig& cfg) {
  if (is_prediction_only(region)) {
    throw PredictionOnlyShape("Monte Carlo needs a geometric region; circle is prediction only");
  }
  validate(cfg);
  const detail::Stopwatch clock;
  const CanonicalPolygon polygon = build_region(region);
  const Triangulation triangulation = triangulate(polygon);

  // Same streams as the parallel driver; plain sums of x and x^2.
  CompensatedSum sum[3], sum_sq[3];
  std::uint64_t drawn = 0;
  for (std::uint64_t chunk = 0; drawn < cfg.samples; ++chunk) {
    CounterRng rng(cfg.seed, chunk);
    const std::uint64_t count = std::min(cfg.chunk_size, cfg.samples - drawn);
    for (std::uint64_t i = 0; i < count; ++i) {
      const AngleTriple v = angles_at(sample_uniform(triangulation, rng), polygon.base());
      const double xs[3] = {v.alpha, v.beta, v.gamma};
      for (int k = 0; k < 3; ++k) {
        sum[k] += xs[k];
        sum_sq[k] += xs[k] * xs[k];
      }
    }
    drawn += count;
  }

  const auto n = static_cast<double>(cfg.samples);
  double mean[3], se[3];
  for (int k = 0; k < 3; ++k) {
    mean[k] = sum[k].value() / n;
    const double variance = (sum_sq[k].value() - n * mean[k] * mean[k]) / (n - 1.0);
    se[k] = std::sqrt(std::max(variance, 0.0) / n);
  }

  EstimateResult result;
  result.mean = {mean[0], mean[1], mean[2]};
  if (cfg.samples >= 2) result.std_error = AngleTriple{se[0], se[1], se[2]};
  result.method = Method::monte_carlo;
  result.region = region;
  result.evaluations = cfg.samples;
  result.seed = cfg.seed;
  result.wall_time = clock.seconds();
  return result;
}

EstimateResult quad_estimate(const RegionSpec& region, const QuadratureConfig& cfg) {
  if (is_prediction_only(region)) {
    throw PredictionOnlyShape("quadrature needs a geometric region; circle is prediction only");
  }
  validate(cfg);
  const detail::Stopwatch clock;
  const CanonicalPolygon polygon = build_region(region);
  const GaussRule rule = gauss_legendre(cfg.gauss_order);

  EstimateResult result;
  result.mean = integrate(polygon, rule, cfg.refinement_levels);
  result.evaluations = quadrature_nodes(region, cfg);
  if (cfg.refinement_levels > 0) {
    const AngleTriple coarse = integrate(polygon, rule, cfg.refinement_levels - 1);
    result.error_estimate = AngleTriple{std::abs(result.mean.alpha - coarse.alpha),
                                        std::abs(result.mean.beta - coarse.beta),
                                        std::abs(result.mean.gamma - coarse.gamma)};
    result.evaluations += quadrature_nodes(region, {cfg.gauss_order, cfg.refinement_levels - 1});
  }
  result.method = Method::quadrature;
  result.region = region;
  result.wall_time = clock.seconds();
  return result;
}

}  // namespace polyangle::reference
