#include <algorithm>

#include "polyangle/errors.hpp"
#include "polyangle/estimators.hpp"

namespace polyangle {

std::vector<SweepPoint> converge_sweep(const RegionSpec& region, const SweepPlan& plan) {
  if (plan.parameters.size() < 2) {
    throw ParseError("a convergence sweep needs at least two parameter values",
                     std::to_string(plan.parameters.size()));
  }
  std::vector<SweepPoint> points;
  points.reserve(plan.parameters.size());
  for (const std::uint64_t parameter : plan.parameters) {
    SweepPoint point;
    point.parameter = parameter;
    switch (plan.method) {
      case Method::grid_paper_exact:
      case Method::grid_midpoint: {
        GridConfig cfg = plan.grid;
        cfg.mode = plan.method == Method::grid_paper_exact ? GridMode::paper_exact
                                                           : GridMode::midpoint;
        cfg.resolution = static_cast<int>(parameter);
        point.result = grid_estimate(region, cfg);
        point.work = parameter * parameter;
        break;
      }
      case Method::monte_carlo: {
        McConfig cfg = plan.mc;
        cfg.samples = parameter;
        point.result = mc_estimate(region, cfg);
        point.work = parameter;
        break;
      }
      case Method::quadrature: {
        QuadratureConfig cfg = plan.quad;
        cfg.refinement_levels = static_cast<int>(parameter);
        point.result = quad_estimate(region, cfg);
        point.work = quadrature_nodes(region, cfg);
        break;
      }
      case Method::prediction:
        throw ParseError("the closed-form prediction has nothing to converge", "predict");
    }
    points.push_back(std::move(point));
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const SweepPoint& a, const SweepPoint& b) { return a.work < b.work; });
  return points;
}

}  // namespace polyangle
