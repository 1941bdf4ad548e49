#pragma once

// Kernels shared by the OpenMP drivers and the serial reference.

#include <array>
#include <chrono>
#include <cstdint>

#include "polyangle/angle_kernel.hpp"
#include "polyangle/estimators.hpp"
#include "polyangle/gauss_legendre.hpp"
#include "polyangle/geometry.hpp"

namespace polyangle::detail {

/// Lattice coordinate i (1-based) of N along [lo, lo + width].
inline double lattice(double lo, double width, int i, int n, GridMode mode) noexcept {
  const double t = mode == GridMode::paper_exact
                       ? static_cast<double>(i) / static_cast<double>(n)
                       : (static_cast<double>(i) - 0.5) / static_cast<double>(n);
  return lo + width * t;
}

inline AngleTriple grid_angles(Point p, BaseEdge base, GridMode mode) {
  return mode == GridMode::paper_exact ? law_of_cosines_angles(p, base) : angles_at(p, base);
}

/// Running count/mean/M2 per component (Welford), mergeable in fixed order.
struct MomentAccumulator {
  std::uint64_t count = 0;
  std::array<double, 3> mean{};
  std::array<double, 3> m2{};

  void add(const AngleTriple& t) noexcept {
    ++count;
    const std::array<double, 3> v{t.alpha, t.beta, t.gamma};
    const double inv = 1.0 / static_cast<double>(count);
    for (int k = 0; k < 3; ++k) {
      const double delta = v[k] - mean[k];
      mean[k] += delta * inv;
      m2[k] += delta * (v[k] - mean[k]);
    }
  }

  /// Chan et al. pairwise merge.
  void merge(const MomentAccumulator& other) noexcept {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double n = na + nb;
    for (int k = 0; k < 3; ++k) {
      const double delta = other.mean[k] - mean[k];
      mean[k] += delta * (nb / n);
      m2[k] += other.m2[k] + delta * delta * (na * nb / n);
    }
    count += other.count;
  }
};

/// Samples one Monte Carlo chunk from its own counter-based stream.
MomentAccumulator mc_chunk(const Triangulation& triangulation, BaseEdge base, std::uint64_t seed,
                           std::uint64_t chunk_index, std::uint64_t count);

/// Sub-triangle `index` (base-4 digits, most significant first) of `t`
/// after `levels` rounds of 4-way midpoint subdivision.
Triangle subtriangle(const Triangle& t, std::uint64_t index, int levels) noexcept;

/// Integral of the angles over `t` (angle times area, degrees * length^2),
/// Duffy-collapsed at a base vertex if `t` has one as a corner.
AngleTriple integrate_triangle(const Triangle& t, BaseEdge base, const GaussRule& rule);

AngleTriple scaled(const AngleTriple& t, double factor) noexcept;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int worker_count();

}  // namespace polyangle::detail
