// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here and are not tunable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyangle/angle_kernel.hpp"
#include "polyangle/cli.hpp"
#include "polyangle/closed_form.hpp"
#include "polyangle/estimators.hpp"
#include "polyangle/rng.hpp"

using namespace polyangle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* pattern, double value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double max_abs_diff(const AngleTriple& a, const AngleTriple& b) {
  return std::max({std::abs(a.alpha - b.alpha), std::abs(a.beta - b.beta),
                   std::abs(a.gamma - b.gamma)});
}

const RegionSpec kSquare = RegularNGon{4, 1.0};
const RegionSpec kPentagon = RegularNGon{5, 1.0};
const RegionSpec kRect = ConvexPolygon{{{0, 0}, {2, 0}, {2, 1}, {0, 1}}, 0};

Outcome published_reproduction() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"repro-paper", "--json"}, out, err);
  const double elapsed = seconds_since(start);
  o.require(code == 0, "repro-paper exit code " + std::to_string(code));
  const auto mean = nlohmann::json::parse(out.str()).at("result").at("mean");
  const AngleTriple got{mean.at("alpha").get<double>(), mean.at("beta").get<double>(),
                        mean.at("gamma").get<double>()};
  const AngleTriple printed{45.064834706400624, 45.00000000000093, 89.93516529359972};
  const double dev = max_abs_diff(got, printed);
  o.require(dev <= 1e-6, "max deviation " + fmt("%.3e", dev));
  o.require(elapsed < 30.0, "took " + fmt("%.1f s", elapsed));
  o.detail = o.pass ? "max |delta| " + fmt("%.3e deg", dev) + ", " + fmt("%.2f s", elapsed)
                    : o.detail;
  return o;
}

Outcome ground_truth() {
  Outcome o;
  const AngleTriple quad = quad_estimate(kSquare, {16, 3}).mean;
  const double truth_dev = max_abs_diff(quad, {45, 45, 90});
  o.require(truth_dev <= 1e-7, "quadrature off (45,45,90) by " + fmt("%.3e", truth_dev));
  const AngleTriple mid = grid_estimate(kSquare, {4096, GridMode::midpoint}).mean;
  const double mid_dev = max_abs_diff(mid, quad);
  o.require(mid_dev <= 1e-4, "midpoint N=4096 differs by " + fmt("%.3e", mid_dev));
  const AngleTriple listing = grid_estimate(kSquare, {1000, GridMode::paper_exact}).mean;
  const double bias = listing.alpha - quad.alpha;
  o.require(std::abs(bias - 0.0648) <= 5e-5, "listing alpha bias " + fmt("%.6f", bias));
  if (o.pass) {
    o.detail = "quad dev " + fmt("%.3e", truth_dev) + ", midpoint dev " + fmt("%.3e", mid_dev) +
               ", listing alpha bias " + fmt("%+.6f deg", bias);
  }
  return o;
}

Outcome conjecture_verification() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"verify", "--n", "3..12"}, out, err);
  const double elapsed = seconds_since(start);
  o.require(code == 0, "verify exit code " + std::to_string(code) + " " + err.str());
  double worst = 0;
  for (int n = 3; n <= 12; ++n) {
    worst = std::max(worst, max_abs_diff(quad_estimate(RegularNGon{n, 1.0}, {16, 3}).mean,
                                         predict(n).mean));
  }
  o.require(worst <= 1e-6, "max deviation " + fmt("%.3e", worst));
  o.require(elapsed < 120.0, "took " + fmt("%.1f s", elapsed));
  if (o.pass) o.detail = "max deviation " + fmt("%.3e deg", worst) + ", " + fmt("%.2f s", elapsed);
  return o;
}

Outcome monte_carlo_consistency() {
  Outcome o;
  const McConfig cfg{1'000'000, 42, 65536};
  set_max_workers(1);
  const EstimateResult base = mc_estimate(kPentagon, cfg);
  if (!base.std_error) {
    o.require(false, "no standard error");
    return o;
  }
  const AngleTriple se = *base.std_error;
  const AngleTriple want{54, 54, 72};
  o.require(std::abs(base.mean.alpha - want.alpha) <= 3 * se.alpha, "alpha outside 3 se");
  o.require(std::abs(base.mean.beta - want.beta) <= 3 * se.beta, "beta outside 3 se");
  o.require(std::abs(base.mean.gamma - want.gamma) <= 3 * se.gamma, "gamma outside 3 se");
  o.require(std::max({se.alpha, se.beta, se.gamma}) <= 0.05, "std_error above 0.05");
  for (int workers : {2, 4, 8}) {
    set_max_workers(workers);
    const EstimateResult again = mc_estimate(kPentagon, cfg);
    o.require(again.mean == base.mean && again.std_error == base.std_error,
              "not bitwise identical at " + std::to_string(workers) + " workers");
  }
  set_max_workers(0);
  if (o.pass) {
    o.detail = "mean (" + fmt("%.4f", base.mean.alpha) + ", " + fmt("%.4f", base.mean.beta) +
               ", " + fmt("%.4f", base.mean.gamma) + "), max se " +
               fmt("%.4f", std::max({se.alpha, se.beta, se.gamma})) +
               ", bitwise equal at 1/2/4/8 workers";
  }
  return o;
}

Outcome pointwise_invariants() {
  Outcome o;
  double worst_sum = 0, worst_polar = 0, worst_mirror = 0, worst_scale = 0;
  long non_finite = 0;
  const RegionSpec regions[] = {kSquare, RegularNGon{3, 1.0}, kPentagon, kRect};
  std::uint64_t stream = 0;
  for (const RegionSpec& region : regions) {
    const CanonicalPolygon polygon = build_region(region);
    const Triangulation triangulation = triangulate(polygon);
    const BaseEdge base = polygon.base();
    const double d = base.length;
    CounterRng rng(20240601, stream++);
    for (int i = 0; i < 10'000; ++i) {
      const Point p = sample_uniform(triangulation, rng);
      const AngleTriple t = angles_at(p, base);
      const AngleTriple mirror = angles_at({d - p.x, p.y}, base);
      const double polar = beta_polar_check(p, base);
      for (double v : {t.alpha, t.beta, t.gamma, mirror.alpha, mirror.beta, mirror.gamma, polar}) {
        if (!std::isfinite(v)) ++non_finite;
      }
      worst_sum = std::max(worst_sum, std::abs(t.sum() - 180.0));
      worst_polar = std::max(worst_polar, std::abs(t.beta - polar));
      worst_mirror = std::max({worst_mirror, std::abs(t.alpha - mirror.beta),
                               std::abs(t.gamma - mirror.gamma)});
      for (double s : {1e-3, 1.0, 1e3}) {
        const AngleTriple r = angles_at({s * p.x, s * p.y}, BaseEdge{s * d});
        worst_scale = std::max(worst_scale, max_abs_diff(r, t));
        if (!std::isfinite(r.alpha) || !std::isfinite(r.beta) || !std::isfinite(r.gamma)) {
          ++non_finite;
        }
      }
    }
  }
  o.require(worst_sum <= 1e-9, "angle sum off by " + fmt("%.3e", worst_sum));
  o.require(worst_polar <= 1e-10, "polar equivalence off by " + fmt("%.3e", worst_polar));
  o.require(worst_mirror <= 1e-10, "mirror identity off by " + fmt("%.3e", worst_mirror));
  o.require(worst_scale <= 1e-9, "scale invariance off by " + fmt("%.3e", worst_scale));
  o.require(non_finite == 0, std::to_string(non_finite) + " non-finite outputs");
  if (o.pass) {
    o.detail = "sum " + fmt("%.1e", worst_sum) + ", polar " + fmt("%.1e", worst_polar) +
               ", mirror " + fmt("%.1e", worst_mirror) + ", scale " + fmt("%.1e", worst_scale) +
               ", 0 non-finite";
  }
  return o;
}

Outcome convergence_orders() {
  Outcome o;
  SweepPlan grid;
  grid.method = Method::grid_paper_exact;
  grid.parameters = {10, 100, 1000};
  const auto g = converge_sweep(kSquare, grid);
  std::vector<double> errors;
  for (const auto& p : g) errors.push_back(std::abs(p.result.mean.alpha - 45.0));
  o.require(errors[0] > errors[1] && errors[1] > errors[2], "listing grid error not decreasing");

  SweepPlan mc;
  mc.method = Method::monte_carlo;
  mc.mc.seed = 42;
  mc.parameters = {1000, 10000, 100000, 1000000};
  const auto m = converge_sweep(kSquare, mc);
  double lo = 1e9, hi = 0;
  for (std::size_t i = 1; i < m.size(); ++i) {
    const AngleTriple& a = *m[i - 1].result.std_error;
    const AngleTriple& b = *m[i].result.std_error;
    for (double r : {a.alpha / b.alpha, a.beta / b.beta, a.gamma / b.gamma}) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  o.require(lo >= 2.5 && hi <= 4.0, "MC decade ratios in [" + fmt("%.3f", lo) + ", " +
                                        fmt("%.3f", hi) + "]");

  SweepPlan quad;
  quad.method = Method::quadrature;
  quad.parameters = {0, 1, 2, 3};
  const auto q = converge_sweep(kSquare, quad);
  const AngleTriple& e2 = *q[2].result.error_estimate;
  const AngleTriple& e3 = *q[3].result.error_estimate;
  o.require(e3.alpha <= e2.alpha && e3.beta <= e2.beta && e3.gamma <= e2.gamma,
            "quadrature error estimate increased at the last level");
  if (o.pass) {
    o.detail = "grid |alpha-45| " + fmt("%.4f", errors[0]) + " > " + fmt("%.4f", errors[1]) +
               " > " + fmt("%.4f", errors[2]) + "; MC ratios [" + fmt("%.3f", lo) + ", " +
               fmt("%.3f", hi) + "]; quad err " + fmt("%.1e", e2.alpha) + " -> " +
               fmt("%.1e", e3.alpha);
  }
  return o;
}

Outcome formula_scope() {
  Outcome o;
  const AngleTriple q = quad_estimate(kRect, {16, 3}).mean;
  const double asym = std::abs(q.alpha - q.beta);
  o.require(asym <= 1e-6, "rectangle alpha-beta " + fmt("%.3e", asym));
  // 360/n decreases in n and is already below gamma - 0.5 from n = 4 on.
  double closest = 1e9;
  int closest_n = 0;
  for (int n = 3; n <= 100'000; ++n) {
    const double gap = std::abs(q.gamma - predict(n).mean.gamma);
    if (gap < closest) {
      closest = gap;
      closest_n = n;
    }
  }
  o.require(closest > 0.5, "gamma within 0.5 of 360/" + std::to_string(closest_n));
  if (o.pass) {
    o.detail = "gamma " + fmt("%.6f", q.gamma) + ", |alpha-beta| " + fmt("%.1e", asym) +
               ", nearest 360/n at n=" + std::to_string(closest_n) + " is " +
               fmt("%.3f deg away", closest);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 published-value reproduction", published_reproduction},
      {"2 ground truth vs grid bias", ground_truth},
      {"3 regular-polygon formula verification", conjecture_verification},
      {"4 Monte Carlo consistency", monte_carlo_consistency},
      {"5 pointwise invariants", pointwise_invariants},
      {"6 convergence orders", convergence_orders},
      {"7 formula scope (2x1 rectangle)", formula_scope},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
