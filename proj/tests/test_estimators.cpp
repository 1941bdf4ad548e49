#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polyangle/errors.hpp"
#include "polyangle/estimators.hpp"
#include "polyangle/gauss_legendre.hpp"

using namespace polyangle;

namespace {

const RegionSpec kSquare = RegularNGon{4, 1.0};
const RegionSpec kRect = ConvexPolygon{{{0, 0}, {2, 0}, {2, 1}, {0, 1}}, 0};

void check_near(const AngleTriple& got, const AngleTriple& want, double tol) {
  CHECK(std::abs(got.alpha - want.alpha) <= tol);
  CHECK(std::abs(got.beta - want.beta) <= tol);
  CHECK(std::abs(got.gamma - want.gamma) <= tol);
}

void check_sum(const EstimateResult& r) { CHECK(std::abs(r.mean.sum() - 180.0) <= 1e-6); }

struct WorkerGuard {
  ~WorkerGuard() { set_max_workers(0); }
};

}  // namespace

TEST_CASE("Gauss-Legendre rule integrates polynomials of degree 2n-1 exactly") {
  for (int n = 1; n <= 32; ++n) {
    const GaussRule rule = gauss_legendre(n);
    double wsum = 0;
    for (double w : rule.weights) wsum += w;
    CHECK(std::abs(wsum - 1.0) <= 1e-14);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double q = 0;
      for (int i = 0; i < n; ++i) q += rule.weights[i] * std::pow(rule.nodes[i], k);
      CHECK(std::abs(q - 1.0 / (k + 1)) <= 1e-13);
    }
  }
}

TEST_CASE("mean as an integral: {1..5} averages to 3") {
  // (1/(5-1)) * integral_1^5 x dx, with the rule mapped onto [1,5].
  const GaussRule rule = gauss_legendre(2);
  double integral = 0;
  for (int i = 0; i < rule.order(); ++i) integral += 4.0 * rule.weights[i] * (1.0 + 4.0 * rule.nodes[i]);
  CHECK(integral / 4.0 == doctest::Approx(3.0).epsilon(1e-15));
  CHECK((1 + 2 + 3 + 4 + 5) / 5.0 == 3.0);
}

TEST_CASE("paper-exact grid reproduces the listing") {
  SUBCASE("N = 1000 matches the printed averages") {
    const EstimateResult r = grid_estimate(kSquare, {1000, GridMode::paper_exact});
    check_near(r.mean, {45.064834706400624, 45.00000000000093, 89.93516529359972}, 1e-6);
    CHECK(r.evaluations == 1'000'000);
    CHECK(r.method == Method::grid_paper_exact);
    check_sum(r);
  }
  SUBCASE("small N equal the transcribed listing bit for bit") {
    // Frozen from the listing run in Python for N = 10 and N = 100.
    const EstimateResult r10 = grid_estimate(kSquare, {10, GridMode::paper_exact});
    CHECK(r10.mean.alpha == 51.263109720105184);
    CHECK(r10.mean.beta == 45.00000000000001);
    CHECK(r10.mean.gamma == 83.73689027989481);
    const EstimateResult r100 = grid_estimate(kSquare, {100, GridMode::paper_exact});
    CHECK(r100.mean.alpha == 45.64632442748124);
    CHECK(r100.mean.gamma == 89.35367557251848);
    for (int n : {3, 10, 37}) {
      const auto o = oracle::listing_grid(n);
      const EstimateResult r = grid_estimate(kSquare, {n, GridMode::paper_exact});
      CHECK(r.mean.alpha == o.alpha);
      CHECK(r.mean.beta == o.beta);
      CHECK(r.mean.gamma == o.gamma);
    }
  }
  SUBCASE("N = 1 is the single corner (1,1)") {
    const EstimateResult r = grid_estimate(kSquare, {1, GridMode::paper_exact});
    check_near(r.mean, {90, 45, 45}, 1e-12);
    CHECK(r.evaluations == 1);
  }
}

TEST_CASE("grid symmetry: listing lattice biases alpha only, midpoint is balanced") {
  const EstimateResult exact = grid_estimate(kSquare, {1000, GridMode::paper_exact});
  CHECK(std::abs(exact.mean.beta - 45.0) <= 1e-8);
  CHECK(exact.mean.alpha - 45.0 == doctest::Approx(0.0648347064).epsilon(1e-6));

  const EstimateResult mid = grid_estimate(kSquare, {1000, GridMode::midpoint});
  CHECK(std::abs(mid.mean.alpha - mid.mean.beta) <= 1e-10);
  check_sum(mid);

  const EstimateResult two = grid_estimate(kSquare, {2, GridMode::midpoint});
  CHECK(std::abs(two.mean.beta - 45.0) <= 1e-12);
}

TEST_CASE("midpoint grid agrees with the independent polar oracle") {
  for (int n : {8, 64, 301}) {
    const auto o = oracle::midpoint_polar_square(n);
    const EstimateResult r = grid_estimate(kSquare, {n, GridMode::midpoint});
    check_near(r.mean, {o.alpha, o.beta, o.gamma}, 1e-11);
  }
}

TEST_CASE("grid on other regions and the empty-grid error") {
  const EstimateResult tri = grid_estimate(RegularNGon{3, 1.0}, {400, GridMode::midpoint});
  check_near(tri.mean, {30, 30, 120}, 0.1);
  check_sum(tri);
  // The only N = 1 listing point is the bounding box corner (1, 0.1).
  CHECK_THROWS_AS(grid_estimate(ConvexPolygon{{{0, 0}, {1, 0}, {0.5, 0.1}}, 0},
                                {1, GridMode::paper_exact}),
                  EmptyGrid);
  CHECK_THROWS_AS(grid_estimate(CircleLimit{}, {10, GridMode::midpoint}), PredictionOnlyShape);
  CHECK_THROWS(grid_estimate(kSquare, {0, GridMode::midpoint}));
}

TEST_CASE("Monte Carlo") {
  SUBCASE("square within 3 standard errors of (45,45,90)") {
    const EstimateResult r = mc_estimate(kSquare, {1'000'000, 42, 65536});
    REQUIRE(r.std_error);
    CHECK(std::abs(r.mean.alpha - 45) <= 3 * r.std_error->alpha);
    CHECK(std::abs(r.mean.beta - 45) <= 3 * r.std_error->beta);
    CHECK(std::abs(r.mean.gamma - 90) <= 3 * r.std_error->gamma);
    CHECK(r.seed == 42u);
    CHECK(r.evaluations == 1'000'000);
    check_sum(r);
  }
  SUBCASE("pentagon within 3 standard errors of (54,54,72)") {
    const EstimateResult r = mc_estimate(RegularNGon{5, 1.0}, {1'000'000, 7, 65536});
    REQUIRE(r.std_error);
    CHECK(std::abs(r.mean.alpha - 54) <= 3 * r.std_error->alpha);
    CHECK(std::abs(r.mean.beta - 54) <= 3 * r.std_error->beta);
    CHECK(std::abs(r.mean.gamma - 72) <= 3 * r.std_error->gamma);
  }
  SUBCASE("a single sample has no standard error") {
    const EstimateResult r = mc_estimate(kSquare, {1, 5, 65536});
    CHECK_FALSE(r.std_error);
    CHECK(r.evaluations == 1);
    check_sum(r);
  }
  SUBCASE("shape misuse and bad configs") {
    CHECK_THROWS_AS(mc_estimate(CircleLimit{}, {}), PredictionOnlyShape);
    CHECK_THROWS(mc_estimate(kSquare, {0, 1, 1}));
    CHECK_THROWS(mc_estimate(kSquare, {10, 1, 0}));
  }
}

TEST_CASE("quadrature") {
  SUBCASE("square to 1e-7 at order 16, three levels") {
    const EstimateResult r = quad_estimate(kSquare, {16, 3});
    check_near(r.mean, {45, 45, 90}, 1e-7);
    REQUIRE(r.error_estimate);
    check_sum(r);
  }
  SUBCASE("triangle and pentagon") {
    check_near(quad_estimate(RegularNGon{3, 1.0}, {16, 3}).mean, {30, 30, 120}, 1e-6);
    check_near(quad_estimate(RegularNGon{5, 1.0}, {16, 3}).mean, {54, 54, 72}, 1e-6);
  }
  SUBCASE("level 0 has no error estimate") {
    CHECK_FALSE(quad_estimate(kSquare, {8, 0}).error_estimate);
  }
  SUBCASE("scale invariance") {
    for (int n : {3, 5, 8}) {
      const AngleTriple unit = quad_estimate(RegularNGon{n, 1.0}, {16, 3}).mean;
      for (double s : {0.5, 2.0}) {
        check_near(quad_estimate(RegularNGon{n, s}, {16, 3}).mean, unit, 1e-9);
      }
    }
  }
  SUBCASE("midpoint oracle N = 4096 agrees within 1e-4") {
    const auto o = oracle::midpoint_polar_square(4096);
    check_near(quad_estimate(kSquare, {16, 3}).mean, {o.alpha, o.beta, o.gamma}, 1e-4);
  }
  SUBCASE("config validation and shape misuse") {
    CHECK_THROWS(quad_estimate(kSquare, {1, 3}));
    CHECK_THROWS(quad_estimate(kSquare, {33, 3}));
    CHECK_THROWS(quad_estimate(kSquare, {16, 9}));
    CHECK_THROWS(quad_estimate(kSquare, {16, -1}));
    CHECK_THROWS_AS(quad_estimate(CircleLimit{}, {}), PredictionOnlyShape);
  }
}

TEST_CASE("estimators agree on regular polygons") {
  for (int n : {3, 4, 5, 6}) {
    const RegionSpec region = RegularNGon{n, 1.0};
    const EstimateResult q = quad_estimate(region, {16, 3});
    const EstimateResult m = mc_estimate(region, {1'000'000, 1234, 65536});
    REQUIRE(m.std_error);
    CHECK(std::abs(q.mean.alpha - m.mean.alpha) <= 3 * m.std_error->alpha);
    CHECK(std::abs(q.mean.beta - m.mean.beta) <= 3 * m.std_error->beta);
    CHECK(std::abs(q.mean.gamma - m.mean.gamma) <= 3 * m.std_error->gamma);
  }
}

TEST_CASE("results do not depend on the worker count") {
  WorkerGuard guard;
  const RegionSpec pent = RegularNGon{5, 1.0};
  set_max_workers(1);
  const auto mc1 = mc_estimate(pent, {200'000, 9, 4096});
  const auto grid1 = grid_estimate(kRect, {300, GridMode::midpoint});
  const auto exact1 = grid_estimate(kSquare, {200, GridMode::paper_exact});
  const auto quad1 = quad_estimate(pent, {12, 3});
  for (int workers : {2, 3, 7}) {
    set_max_workers(workers);
    CHECK(max_workers() == workers);
    CHECK(mc_estimate(pent, {200'000, 9, 4096}).mean == mc1.mean);
    CHECK(mc_estimate(pent, {200'000, 9, 4096}).std_error == mc1.std_error);
    CHECK(grid_estimate(kRect, {300, GridMode::midpoint}).mean == grid1.mean);
    CHECK(grid_estimate(kSquare, {200, GridMode::paper_exact}).mean == exact1.mean);
    CHECK(quad_estimate(pent, {12, 3}).mean == quad1.mean);
    CHECK(quad_estimate(pent, {12, 3}).error_estimate == quad1.error_estimate);
  }
  // Different seeds draw different samples.
  CHECK_FALSE(mc_estimate(pent, {200'000, 10, 4096}).mean == mc1.mean);
}

TEST_CASE("parallel drivers match the serial reference") {
  const RegionSpec pent = RegularNGon{5, 1.0};
  // Same order of additions: identical.
  CHECK(reference::grid_estimate(kSquare, {250, GridMode::paper_exact}).mean ==
        grid_estimate(kSquare, {250, GridMode::paper_exact}).mean);

  check_near(reference::grid_estimate(kRect, {257, GridMode::midpoint}).mean,
             grid_estimate(kRect, {257, GridMode::midpoint}).mean, 1e-12);

  const auto mc_ref = reference::mc_estimate(pent, {100'003, 17, 1000});
  const auto mc_par = mc_estimate(pent, {100'003, 17, 1000});
  check_near(mc_ref.mean, mc_par.mean, 1e-11);
  REQUIRE(mc_ref.std_error);
  REQUIRE(mc_par.std_error);
  check_near(*mc_ref.std_error, *mc_par.std_error, 1e-12);

  for (const RegionSpec& region : {kSquare, pent, kRect}) {
    const auto q_ref = reference::quad_estimate(region, {10, 2});
    const auto q_par = quad_estimate(region, {10, 2});
    check_near(q_ref.mean, q_par.mean, 1e-12);
    CHECK(q_ref.evaluations == q_par.evaluations);
  }
}

TEST_CASE("convergence sweeps") {
  SUBCASE("listing grid error strictly decreases") {
    SweepPlan plan;
    plan.method = Method::grid_paper_exact;
    plan.parameters = {100, 10, 1000};
    const auto points = converge_sweep(kSquare, plan);
    REQUIRE(points.size() == 3);
    CHECK(points[0].work == 100);
    CHECK(points[1].work == 10'000);
    CHECK(points[2].work == 1'000'000);
    CHECK(std::abs(points[0].result.mean.alpha - 45) > std::abs(points[1].result.mean.alpha - 45));
    CHECK(std::abs(points[1].result.mean.alpha - 45) > std::abs(points[2].result.mean.alpha - 45));
  }
  SUBCASE("midpoint grid within 1e-3 at N = 1000") {
    SweepPlan plan;
    plan.method = Method::grid_midpoint;
    plan.parameters = {10, 100, 1000};
    const auto points = converge_sweep(kSquare, plan);
    CHECK(std::abs(points.back().result.mean.alpha - 45) <= 1e-3);
  }
  SUBCASE("quadrature error estimate non-increasing in the last two steps") {
    SweepPlan plan;
    plan.method = Method::quadrature;
    plan.parameters = {0, 1, 2, 3};
    const auto points = converge_sweep(kSquare, plan);
    REQUIRE(points.size() == 4);
    CHECK_FALSE(points[0].result.error_estimate);
    const auto& e2 = *points[2].result.error_estimate;
    const auto& e3 = *points[3].result.error_estimate;
    CHECK(e3.alpha <= e2.alpha);
    CHECK(e3.beta <= e2.beta);
    CHECK(e3.gamma <= e2.gamma);
    CHECK(points[3].work == quadrature_nodes(kSquare, {16, 3}));
  }
  SUBCASE("needs two points") {
    SweepPlan plan;
    plan.parameters = {10};
    CHECK_THROWS(converge_sweep(kSquare, plan));
  }
}

TEST_CASE("method names round-trip") {
  for (Method m : {Method::grid_paper_exact, Method::grid_midpoint, Method::monte_carlo,
                   Method::quadrature, Method::prediction}) {
    CHECK(method_from_name(method_name(m)) == m);
  }
  CHECK_THROWS_AS(method_from_name("simpson"), ParseError);
}
