#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyangle/angle_kernel.hpp"
#include "polyangle/geometry.hpp"

namespace polyangle {

enum class GridMode { paper_exact, midpoint };

struct GridConfig {
  int resolution = 1000;
  GridMode mode = GridMode::paper_exact;
};

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::uint64_t chunk_size = 65536;
};

struct QuadratureConfig {
  int gauss_order = 16;
  int refinement_levels = 3;
};

/// `prediction` marks results taken from the closed form rather than estimated.
enum class Method { grid_paper_exact, grid_midpoint, monte_carlo, quadrature, prediction };

/// "grid:paper_exact", "grid:midpoint", "mc", "quad", "predict".
std::string method_name(Method method);
Method method_from_name(const std::string& name);

struct EstimateResult {
  AngleTriple mean;
  std::optional<AngleTriple> std_error;       // Monte Carlo, samples >= 2
  std::optional<AngleTriple> error_estimate;  // quadrature, levels >= 1
  Method method = Method::quadrature;
  RegionSpec region;
  std::uint64_t evaluations = 0;
  double wall_time = 0.0;  // seconds
  std::optional<std::uint64_t> seed;

  friend bool operator==(const EstimateResult&, const EstimateResult&) = default;
};

void validate(const GridConfig& cfg);
void validate(const McConfig& cfg);
void validate(const QuadratureConfig& cfg);

/// Arithmetic mean over a lattice on the region's bounding box, keeping the
/// points inside the region. paper_exact uses (i/N, j/N), i,j = 1..N, the
/// listing's kernel and naive summation in listing order (outer x, inner
/// y); midpoint uses ((i-0.5)/N, (j-0.5)/N) with compensated summation.
/// Throws EmptyGrid when no lattice point lies inside.
EstimateResult grid_estimate(const RegionSpec& region, const GridConfig& cfg);

/// Sample mean over cfg.samples area-uniform apexes. Chunk k draws from
/// CounterRng(seed, k); chunk statistics are merged in chunk order, so the
/// result is bitwise independent of the worker count.
EstimateResult mc_estimate(const RegionSpec& region, const McConfig& cfg);

/// Area-normalized integral of the angles. Each fan triangle is split
/// uniformly `refinement_levels` times and integrated with a tensor
/// Gauss-Legendre rule through the Duffy map, collapsed at a base vertex
/// when the sub-triangle touches one. error_estimate is |I(L) - I(L-1)|.
EstimateResult quad_estimate(const RegionSpec& region, const QuadratureConfig& cfg);

/// Number of integrand evaluations quad_estimate performs at the given
/// level (excluding the L-1 pass used for the error estimate).
std::uint64_t quadrature_nodes(const RegionSpec& region, const QuadratureConfig& cfg);

struct SweepPlan {
  Method method = Method::grid_paper_exact;
  /// N for grids, sample count for MC, refinement level for quadrature.
  std::vector<std::uint64_t> parameters;
  GridConfig grid;
  McConfig mc;
  QuadratureConfig quad;
};

struct SweepPoint {
  std::uint64_t parameter = 0;
  std::uint64_t work = 0;  // N^2, samples, or quadrature nodes
  EstimateResult result;
};

/// Runs the estimator once per parameter; results ordered by increasing work.
/// Requires at least two parameters.
std::vector<SweepPoint> converge_sweep(const RegionSpec& region, const SweepPlan& plan);

/// Caps the OpenMP worker count used by the estimators (<= 0 restores the
/// runtime default). Results never depend on it.
void set_max_workers(int workers);
int max_workers();

/// Straightforward single-threaded implementations, kept as a cross-check
/// for the parallel kernels and as the benchmark baseline.
namespace reference {

EstimateResult grid_estimate(const RegionSpec& region, const GridConfig& cfg);
EstimateResult mc_estimate(const RegionSpec& region, const McConfig& cfg);
EstimateResult quad_estimate(const RegionSpec& region, const QuadratureConfig& cfg);

}  // namespace reference

}  // namespace polyangle
