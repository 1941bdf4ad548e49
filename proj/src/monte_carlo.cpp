#include <omp.h>

#include <cmath>
#include <vector>

#include "internal.hpp"
#include "polyangle/errors.hpp"

namespace polyangle {

EstimateResult mc_estimate(const RegionSpec& region, const McConfig& cfg) {
  if (is_prediction_only(region)) {
    throw PredictionOnlyShape("Monte Carlo needs a geometric region; circle is prediction only");
  }
  validate(cfg);
  const detail::Stopwatch clock;
  const CanonicalPolygon polygon = build_region(region);
  const Triangulation triangulation = triangulate(polygon);
  const BaseEdge base = polygon.base();

  const std::uint64_t chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<detail::MomentAccumulator> partial(chunks);
  const auto chunk_count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(detail::worker_count())
  for (std::int64_t k = 0; k < chunk_count; ++k) {
    const auto index = static_cast<std::uint64_t>(k);
    const std::uint64_t first = index * cfg.chunk_size;
    const std::uint64_t count = std::min(cfg.chunk_size, cfg.samples - first);
    partial[index] = detail::mc_chunk(triangulation, base, cfg.seed, index, count);
  }

  detail::MomentAccumulator total;
  for (const auto& p : partial) total.merge(p);

  EstimateResult result;
  result.mean = {total.mean[0], total.mean[1], total.mean[2]};
  if (total.count >= 2) {
    const double n = static_cast<double>(total.count);
    const auto se = [&](int k) { return std::sqrt(total.m2[k] / (n - 1.0)) / std::sqrt(n); };
    result.std_error = AngleTriple{se(0), se(1), se(2)};
  }
  result.method = Method::monte_carlo;
  result.region = region;
  result.evaluations = total.count;
  result.seed = cfg.seed;
  result.wall_time = clock.seconds();
  return result;
}

}  // namespace polyangle
