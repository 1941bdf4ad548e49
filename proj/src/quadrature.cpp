#include <omp.h>

#include <cmath>
#include <vector>

#include "internal.hpp"
#include "polyangle/errors.hpp"
#include "polyangle/summation.hpp"

namespace polyangle {
namespace {

constexpr std::uint64_t kBlock = 64;

/// Area-normalized integral at one refinement level. Sub-triangles are
/// summed in fixed blocks, then blocks in index order.
AngleTriple integrate_level(const Triangulation& triangulation, BaseEdge base,
                            const GaussRule& rule, int levels, double region_area) {
  const auto triangles = triangulation.triangles();
  const std::uint64_t per_triangle = std::uint64_t{1} << (2 * levels);
  const std::uint64_t total = per_triangle * triangles.size();
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;

  std::vector<AngleTriple> block_sums(blocks);
  const auto block_count = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(detail::worker_count())
  for (std::int64_t b = 0; b < block_count; ++b) {
    CompensatedSum alpha, beta, gamma;
    const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t last = std::min(first + kBlock, total);
    for (std::uint64_t g = first; g < last; ++g) {
      const Triangle sub = detail::subtriangle(triangles[g / per_triangle], g % per_triangle, levels);
      const AngleTriple v = detail::integrate_triangle(sub, base, rule);
      alpha += v.alpha;
      beta += v.beta;
      gamma += v.gamma;
    }
    block_sums[static_cast<std::size_t>(b)] = {alpha.value(), beta.value(), gamma.value()};
  }

  CompensatedSum alpha, beta, gamma;
  for (const AngleTriple& s : block_sums) {
    alpha += s.alpha;
    beta += s.beta;
    gamma += s.gamma;
  }
  return detail::scaled({alpha.value(), beta.value(), gamma.value()}, 1.0 / region_area);
}

}  // namespace

std::uint64_t quadrature_nodes(const RegionSpec& region, const QuadratureConfig& cfg) {
  validate(cfg);
  const CanonicalPolygon polygon = build_region(region);
  const auto order = static_cast<std::uint64_t>(cfg.gauss_order);
  return (polygon.size() - 2) * (std::uint64_t{1} << (2 * cfg.refinement_levels)) * order * order;
}

EstimateResult quad_estimate(const RegionSpec& region, const QuadratureConfig& cfg) {
  if (is_prediction_only(region)) {
    throw PredictionOnlyShape("quadrature needs a geometric region; circle is prediction only");
  }
  validate(cfg);
  const detail::Stopwatch clock;
  const CanonicalPolygon polygon = build_region(region);
  const Triangulation triangulation = triangulate(polygon);
  const GaussRule rule = gauss_legendre(cfg.gauss_order);
  const double region_area = area(polygon);
  const int levels = cfg.refinement_levels;

  EstimateResult result;
  result.mean = integrate_level(triangulation, polygon.base(), rule, levels, region_area);
  result.evaluations = quadrature_nodes(region, cfg);
  if (levels > 0) {
    const AngleTriple coarse =
        integrate_level(triangulation, polygon.base(), rule, levels - 1, region_area);
    result.error_estimate = AngleTriple{std::abs(result.mean.alpha - coarse.alpha),
                                        std::abs(result.mean.beta - coarse.beta),
                                        std::abs(result.mean.gamma - coarse.gamma)};
    result.evaluations += quadrature_nodes(region, {cfg.gauss_order, levels - 1});
  }
  result.method = Method::quadrature;
  result.region = region;
  result.wall_time = clock.seconds();
  return result;
}

}  // namespace polyangle
