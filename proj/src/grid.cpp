#include <omp.h>

#include <vector>

#include "internal.hpp"
#include "polyangle/errors.hpp"
#include "polyangle/summation.hpp"

namespace polyangle {
namespace {

constexpr int kRowBlock = 32;

struct RowSums {
  CompensatedSum alpha, beta, gamma;
  std::uint64_t count = 0;
};

}  // namespace

EstimateResult grid_estimate(const RegionSpec& region, const GridConfig& cfg) {
  validate(cfg);
  const detail::Stopwatch clock;
  const CanonicalPolygon polygon = build_region(region);
  const BaseEdge base = polygon.base();
  const BoundingBox box = bounding_box(polygon);
  const double width = box.xmax - box.xmin;
  const double height = box.ymax - box.ymin;
  const int n = cfg.resolution;
  const int workers = detail::worker_count();

  AngleTriple mean;
  std::uint64_t count = 0;

  if (cfg.mode == GridMode::paper_exact) {
    // Evaluate a block of rows in parallel, then add the values serially in
    // listing order so the naive sum is reproduced bit for bit.
    std::vector<AngleTriple> values(static_cast<std::size_t>(kRowBlock) * n);
    std::vector<int> used(kRowBlock);
    double sum_alpha = 0.0, sum_beta = 0.0, sum_gamma = 0.0;
    for (int first = 1; first <= n; first += kRowBlock) {
      const int rows = std::min(kRowBlock, n - first + 1);
#pragma omp parallel for schedule(static) num_threads(workers)
      for (int r = 0; r < rows; ++r) {
        const double x = detail::lattice(box.xmin, width, first + r, n, cfg.mode);
        int k = 0;
        for (int j = 1; j <= n; ++j) {
          const Point p{x, detail::lattice(box.ymin, height, j, n, cfg.mode)};
          if (!contains(polygon, p)) continue;
          values[static_cast<std::size_t>(r) * n + k++] = detail::grid_angles(p, base, cfg.mode);
        }
        used[r] = k;
      }
      for (int r = 0; r < rows; ++r) {
        for (int k = 0; k < used[r]; ++k) {
          const AngleTriple& v = values[static_cast<std::size_t>(r) * n + k];
          sum_alpha += v.alpha;
          sum_beta += v.beta;
          sum_gamma += v.gamma;
        }
        count += static_cast<std::uint64_t>(used[r]);
      }
    }
    if (count == 0) throw EmptyGrid("no grid point falls inside the region");
    const auto total = static_cast<double>(count);
    mean = {sum_alpha / total, sum_beta / total, sum_gamma / total};
  } else {
    std::vector<RowSums> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
    for (int i = 1; i <= n; ++i) {
      RowSums& row = rows[static_cast<std::size_t>(i - 1)];
      const double x = detail::lattice(box.xmin, width, i, n, cfg.mode);
      for (int j = 1; j <= n; ++j) {
        const Point p{x, detail::lattice(box.ymin, height, j, n, cfg.mode)};
        if (!contains(polygon, p)) continue;
        const AngleTriple v = detail::grid_angles(p, base, cfg.mode);
        row.alpha += v.alpha;
        row.beta += v.beta;
        row.gamma += v.gamma;
        ++row.count;
      }
    }
    CompensatedSum alpha, beta, gamma;
    for (const RowSums& row : rows) {
      alpha += row.alpha.value();
      beta += row.beta.value();
      gamma += row.gamma.value();
      count += row.count;
    }
    if (count == 0) throw EmptyGrid("no grid point falls inside the region");
    const auto total = static_cast<double>(count);
    mean = {alpha.value() / total, beta.value() / total, gamma.value() / total};
  }

  EstimateResult result;
  result.mean = mean;
  result.method =
      cfg.mode == GridMode::paper_exact ? Method::grid_paper_exact : Method::grid_midpoint;
  result.region = region;
  result.evaluations = count;
  result.wall_time = clock.seconds();
  return result;
}

}  // namespace polyangle
