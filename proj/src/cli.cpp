#include "polyangle/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyangle/closed_form.hpp"
#include "polyangle/errors.hpp"
#include "polyangle/estimators.hpp"
#include "polyangle/region_string.hpp"
#include "polyangle/report.hpp"

namespace polyangle::cli {
namespace {

// Printed averages of the original 1000 x 1000 grid run.
constexpr AngleTriple kPublishedGrid{45.064834706400624, 45.00000000000093, 89.93516529359972};
constexpr int kPublishedResolution = 1000;

struct CommonOptions {
  std::string region = "square";
  std::string method = "quad";
  int grid_n = 1000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::uint64_t chunk_size = 65536;
  int order = 16;
  int levels = 3;
  bool json = false;
  int threads = 0;
};

Method parse_method(const std::string& token) {
  if (token == "grid") return Method::grid_paper_exact;
  if (token == "grid-mid") return Method::grid_midpoint;
  if (token == "mc") return Method::monte_carlo;
  if (token == "quad") return Method::quadrature;
  if (token == "predict") return Method::prediction;
  throw ParseError("unknown method '" + token + "' (expected grid, grid-mid, mc, quad or predict)",
                   token);
}

std::uint64_t parse_u64(std::string_view token, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'",
                     std::string(token));
  }
  return value;
}

/// "a..b", inclusive.
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw ParseError("expected a range <lo>..<hi>, got '" + text + "'", text);
  }
  const auto lo = parse_u64(std::string_view(text).substr(0, dots), "range start");
  const auto hi = parse_u64(std::string_view(text).substr(dots + 2), "range end");
  if (lo > hi) throw ParseError("empty range '" + text + "'", text);
  if (hi > 1'000'000) throw ParseError("range end too large '" + text + "'", text);
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    values.push_back(parse_u64(rest.substr(0, comma), "sweep value"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return values;
}

ConfigEcho echo_for(Method method, const CommonOptions& o) {
  ConfigEcho echo;
  switch (method) {
    case Method::grid_paper_exact:
    case Method::grid_midpoint: echo.grid_resolution = o.grid_n; break;
    case Method::monte_carlo:
      echo.samples = o.samples;
      echo.chunk_size = o.chunk_size;
      break;
    case Method::quadrature:
      echo.gauss_order = o.order;
      echo.refinement_levels = o.levels;
      break;
    case Method::prediction: break;
  }
  return echo;
}

EstimateResult run_method(Method method, const RegionSpec& region, const CommonOptions& o) {
  switch (method) {
    case Method::grid_paper_exact:
      return grid_estimate(region, {o.grid_n, GridMode::paper_exact});
    case Method::grid_midpoint: return grid_estimate(region, {o.grid_n, GridMode::midpoint});
    case Method::monte_carlo: return mc_estimate(region, {o.samples, o.seed, o.chunk_size});
    case Method::quadrature: return quad_estimate(region, {o.order, o.levels});
    case Method::prediction: break;
  }
  std::optional<int> n;
  if (const auto* ngon = std::get_if<RegularNGon>(&region)) {
    n = ngon->n;
  } else if (!std::holds_alternative<CircleLimit>(region)) {
    throw PredictionOnlyShape("the closed form covers regular polygons and the circle only");
  }
  EstimateResult result;
  result.mean = predict(n).mean;
  result.method = Method::prediction;
  result.region = region;
  return result;
}

void print_triple(std::ostream& out, const char* label, const AngleTriple& t) {
  out << std::left << std::setw(16) << label << format_degrees(t.alpha) << "  "
      << format_degrees(t.beta) << "  " << format_degrees(t.gamma) << '\n';
}

void print_result(std::ostream& out, const std::string& region, const EstimateResult& r) {
  out << std::left << std::setw(16) << "region" << region << '\n'
      << std::setw(16) << "method" << method_name(r.method) << '\n';
  out << std::setw(16) << "alpha" << format_degrees(r.mean.alpha) << '\n'
      << std::setw(16) << "beta" << format_degrees(r.mean.beta) << '\n'
      << std::setw(16) << "gamma" << format_degrees(r.mean.gamma) << '\n';
  if (r.std_error) print_triple(out, "std_error", *r.std_error);
  if (r.error_estimate) print_triple(out, "error_estimate", *r.error_estimate);
  if (r.seed) out << std::setw(16) << "seed" << *r.seed << '\n';
  out << std::setw(16) << "evaluations" << r.evaluations << '\n'
      << std::setw(16) << "wall_time_s" << format_degrees(r.wall_time) << '\n';
}

void apply_threads(int threads) {
  if (threads <= 0) {
    if (const char* env = std::getenv("POLYANGLE_THREADS")) {
      threads = static_cast<int>(parse_u64(env, "POLYANGLE_THREADS"));
    }
  }
  set_max_workers(threads);
}

int cmd_repro_paper(const CommonOptions& o, double tolerance, std::ostream& out,
                    std::ostream& err) {
  const RegionSpec square = RegularNGon{4, 1.0};
  CommonOptions grid_opts = o;
  grid_opts.grid_n = kPublishedResolution;
  const EstimateResult grid = grid_estimate(square, {kPublishedResolution, GridMode::paper_exact});

  const AngleTriple delta{grid.mean.alpha - kPublishedGrid.alpha, grid.mean.beta - kPublishedGrid.beta,
                          grid.mean.gamma - kPublishedGrid.gamma};
  const bool ok = std::abs(delta.alpha) <= tolerance && std::abs(delta.beta) <= tolerance &&
                  std::abs(delta.gamma) <= tolerance;

  if (o.json) {
    out << to_json(make_record(grid, "square", method_name(grid.method),
                               echo_for(Method::grid_paper_exact, grid_opts)))
               .dump()
        << '\n';
  } else {
    const EstimateResult truth = quad_estimate(square, {16, 3});
    const auto row = [&](const char* name, double value, double reference, double d) {
      out << name << " = " << format_roundtrip(value) << "   printed " << format_roundtrip(reference)
          << "   delta " << format_roundtrip(d) << (std::abs(d) <= tolerance ? "   ok" : "   MISMATCH")
          << '\n';
    };
    out << "grid:paper_exact on the unit square, points (i/1000, j/1000), i,j = 1..1000\n";
    row("<alpha>", grid.mean.alpha, kPublishedGrid.alpha, delta.alpha);
    row("<beta> ", grid.mean.beta, kPublishedGrid.beta, delta.beta);
    row("<gamma>", grid.mean.gamma, kPublishedGrid.gamma, delta.gamma);
    out << "tolerance " << format_roundtrip(tolerance) << " deg\n";
    print_triple(out, "quadrature", truth.mean);
    print_triple(out, "grid bias",
                 {grid.mean.alpha - truth.mean.alpha, grid.mean.beta - truth.mean.beta,
                  grid.mean.gamma - truth.mean.gamma});
  }
  if (!ok) {
    err << "repro-paper: mismatch beyond tolerance " << format_roundtrip(tolerance)
        << ": delta alpha " << format_roundtrip(delta.alpha) << ", delta beta "
        << format_roundtrip(delta.beta) << ", delta gamma " << format_roundtrip(delta.gamma)
        << '\n';
    return kVerificationFailed;
  }
  return kSuccess;
}

int cmd_average(const CommonOptions& o, std::ostream& out) {
  const RegionSpec region = parse_region(o.region);
  const Method method = parse_method(o.method);
  const EstimateResult result = run_method(method, region, o);
  if (o.json) {
    out << to_json(make_record(result, o.region, method_name(method), echo_for(method, o))).dump()
        << '\n';
  } else {
    print_result(out, o.region, result);
  }
  return kSuccess;
}

int cmd_verify(const CommonOptions& o, const std::string& range, std::ostream& out,
               std::ostream& err) {
  constexpr double kTolerance = 1e-6;
  const auto [lo, hi] = parse_range(range);
  if (lo < 3) throw InvalidN("verify needs n >= 3, got range " + range);
  if (hi > 64) throw InvalidN("verify supports n <= 64, got range " + range);

  std::vector<int> offending;
  double worst = 0.0;
  if (!o.json) {
    out << std::left << std::setw(5) << "n" << std::setw(20) << "alpha" << std::setw(20) << "beta"
        << std::setw(20) << "gamma" << std::setw(36) << "predicted alpha/gamma" << "max_dev\n";
  }
  for (int n = lo; n <= hi; ++n) {
    const RegionSpec region = RegularNGon{n, 1.0};
    const EstimateResult r = quad_estimate(region, {o.order, o.levels});
    const Prediction p = predict(n);
    const double dev = std::max({std::abs(r.mean.alpha - p.mean.alpha),
                                 std::abs(r.mean.beta - p.mean.beta),
                                 std::abs(r.mean.gamma - p.mean.gamma)});
    worst = std::max(worst, dev);
    if (!(dev <= kTolerance)) offending.push_back(n);
    if (o.json) {
      out << to_json(make_record(r, format_region(region), method_name(r.method),
                                 echo_for(Method::quadrature, o)))
                 .dump()
          << '\n';
    } else {
      std::ostringstream predicted;
      predicted << format_degrees(p.mean.alpha) << "/" << format_degrees(p.mean.gamma);
      char dev_text[32];
      std::snprintf(dev_text, sizeof dev_text, "%.3e", dev);
      out << std::left << std::setw(5) << n << std::setw(20) << format_degrees(r.mean.alpha)
          << std::setw(20) << format_degrees(r.mean.beta) << std::setw(20)
          << format_degrees(r.mean.gamma) << std::setw(36) << predicted.str() << dev_text << '\n';
    }
  }
  if (!o.json) {
    char text[32];
    std::snprintf(text, sizeof text, "%.3e", worst);
    out << "max deviation " << text << " deg (tolerance 1e-06)\n";
  }
  if (!offending.empty()) {
    err << "verify: deviation above 1e-6 deg for n =";
    for (int n : offending) err << ' ' << n;
    err << '\n';
    return kVerificationFailed;
  }
  return kSuccess;
}

std::vector<std::uint64_t> default_sweep(Method method) {
  switch (method) {
    case Method::monte_carlo: return {1000, 10000, 100000, 1000000};
    case Method::quadrature: return {0, 1, 2, 3};
    default: return {10, 100, 1000};
  }
}

int cmd_converge(const CommonOptions& o, const std::string& sweep, const std::string& out_path,
                 bool timing, std::ostream& out, std::ostream& err) {
  const RegionSpec region = parse_region(o.region);
  SweepPlan plan;
  plan.method = parse_method(o.method);
  plan.parameters = sweep.empty() ? default_sweep(plan.method) : parse_list(sweep);
  plan.mc = {o.samples, o.seed, o.chunk_size};
  plan.quad = {o.order, o.levels};

  std::ofstream file;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "converge: cannot open '" << out_path << "' for writing\n";
      return kIoError;
    }
  }

  const std::vector<SweepPoint> points = converge_sweep(region, plan);
  std::optional<AngleTriple> truth;
  if (plan.method != Method::quadrature) truth = quad_estimate(region, {16, 3}).mean;

  std::vector<CsvRow> rows;
  for (const SweepPoint& p : points) {
    CsvRow row;
    row.region = o.region;
    row.method = method_name(p.result.method);
    row.work = p.work;
    row.mean = p.result.mean;
    if (truth) {
      row.error = AngleTriple{std::abs(p.result.mean.alpha - truth->alpha),
                              std::abs(p.result.mean.beta - truth->beta),
                              std::abs(p.result.mean.gamma - truth->gamma)};
    } else {
      row.error = p.result.error_estimate;
    }
    row.std_error = p.result.std_error;
    row.seed = p.result.seed;
    if (timing) row.wall_time_s = p.result.wall_time;
    rows.push_back(std::move(row));
  }

  std::ostream& sink = file.is_open() ? static_cast<std::ostream&>(file) : out;
  write_csv(sink, rows);
  sink.flush();
  if (!sink) {
    err << "converge: write to '" << out_path << "' failed\n";
    return kIoError;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected triangle angles for a base edge of a polygon and a uniform apex",
               "polyangle"};
  app.require_subcommand(1);

  CommonOptions opts;
  double tolerance = 1e-6;
  std::string range;
  std::string sweep;
  std::string out_path;
  bool timing = false;

  const auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", opts.threads,
                    "Worker cap (default: POLYANGLE_THREADS or all cores); results do not depend on it");
  };
  const auto add_method_options = [&](CLI::App* sub) {
    sub->add_option("--region", opts.region, "Region spec (see `shapes`)");
    sub->add_option("--method", opts.method, "grid | grid-mid | mc | quad | predict");
    sub->add_option("--n", opts.grid_n, "Grid resolution N");
    sub->add_option("--samples", opts.samples, "Monte Carlo sample count");
    sub->add_option("--seed", opts.seed, "Monte Carlo seed");
    sub->add_option("--chunk-size", opts.chunk_size, "Monte Carlo samples per RNG stream");
    sub->add_option("--order", opts.order, "Gauss-Legendre points per axis, 2..32");
    sub->add_option("--levels", opts.levels, "Uniform refinement levels, 0..8");
    add_threads(sub);
  };

  auto* repro = app.add_subcommand("repro-paper", "Re-run the original 1000x1000 grid on the unit square");
  repro->add_flag("--json", opts.json, "Emit a JSON run record");
  repro->add_option("--tolerance", tolerance)->group("");
  add_threads(repro);

  auto* average = app.add_subcommand("average", "Estimate the mean angles for one region and method");
  add_method_options(average);
  average->add_flag("--json", opts.json, "Emit a JSON run record");

  auto* verify = app.add_subcommand("verify", "Compare quadrature against the regular-polygon formula");
  verify->add_option("--n", range, "Range of side counts lo..hi within 3..64")->required();
  verify->add_option("--order", opts.order, "Gauss-Legendre points per axis, 2..32");
  verify->add_option("--levels", opts.levels, "Uniform refinement levels, 0..8");
  verify->add_flag("--json", opts.json, "Emit one JSON run record per line");
  add_threads(verify);

  auto* converge = app.add_subcommand("converge", "Write a convergence sweep as CSV");
  add_method_options(converge);
  converge->add_option("--sweep", sweep, "Comma-separated N / samples / levels");
  converge->add_option("--out", out_path, "CSV path (default: stdout)");
  converge->add_flag("--timing", timing, "Fill the wall_time_s column");

  auto* shapes = app.add_subcommand("shapes", "List the region grammar");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    apply_threads(opts.threads);
    if (repro->parsed()) return cmd_repro_paper(opts, tolerance, out, err);
    if (average->parsed()) return cmd_average(opts, out);
    if (verify->parsed()) return cmd_verify(opts, range, out, err);
    if (converge->parsed()) return cmd_converge(opts, sweep, out_path, timing, out, err);
    if (shapes->parsed()) {
      out << region_grammar_help();
      return kSuccess;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidN& e) {
    err << "error: InvalidN: " << e.what() << '\n';
    return kParseError;
  } catch (const PredictionOnlyShape& e) {
    err << "error: " << e.what() << '\n';
    return kShapeMisuse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace polyangle::cli
