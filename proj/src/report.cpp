#include "polyangle/report.hpp"

#include <charconv>
#include <cstdio>
#include <ctime>
#include <ostream>

#include "polyangle/region_string.hpp"

namespace polyangle {
namespace {

using nlohmann::json;

json triple_json(const AngleTriple& t) {
  return {{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}};
}

AngleTriple triple_from(const json& j) {
  return {j.at("alpha").get<double>(), j.at("beta").get<double>(), j.at("gamma").get<double>()};
}

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

json optional_triple(const std::optional<AngleTriple>& value) {
  return value ? triple_json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::optional<AngleTriple> optional_triple_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return triple_from(j.at(key));
}

}  // namespace

std::string iso8601_now() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

RunRecord make_record(const EstimateResult& result, const std::string& region_string,
                      const std::string& method_string, const ConfigEcho& config) {
  RunRecord r;
  r.result = result;
  r.region_string = region_string;
  r.method_string = method_string;
  r.config = config;
  r.timestamp = iso8601_now();
  return r;
}

nlohmann::json to_json(const RunRecord& record) {
  const EstimateResult& res = record.result;
  json config = {{"N", optional_json(record.config.grid_resolution)},
                 {"samples", optional_json(record.config.samples)},
                 {"chunk_size", optional_json(record.config.chunk_size)},
                 {"order", optional_json(record.config.gauss_order)},
                 {"levels", optional_json(record.config.refinement_levels)}};
  json result = {{"mean", triple_json(res.mean)},
                 {"std_error", optional_triple(res.std_error)},
                 {"error_estimate", optional_triple(res.error_estimate)},
                 {"method", method_name(res.method)},
                 {"region", format_region(res.region)},
                 {"evaluations", res.evaluations},
                 {"wall_time", res.wall_time},
                 {"seed", optional_json(res.seed)}};
  return {{"tool_version", record.tool_version},
          {"timestamp", record.timestamp},
          {"region", record.region_string},
          {"method", record.method_string},
          {"config", std::move(config)},
          {"result", std::move(result)}};
}

RunRecord record_from_json(const nlohmann::json& j) {
  RunRecord r;
  r.tool_version = j.at("tool_version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.region_string = j.at("region").get<std::string>();
  r.method_string = j.at("method").get<std::string>();

  const json& c = j.at("config");
  r.config.grid_resolution = optional_from<int>(c, "N");
  r.config.samples = optional_from<std::uint64_t>(c, "samples");
  r.config.chunk_size = optional_from<std::uint64_t>(c, "chunk_size");
  r.config.gauss_order = optional_from<int>(c, "order");
  r.config.refinement_levels = optional_from<int>(c, "levels");

  const json& res = j.at("result");
  r.result.mean = triple_from(res.at("mean"));
  r.result.std_error = optional_triple_from(res, "std_error");
  r.result.error_estimate = optional_triple_from(res, "error_estimate");
  r.result.method = method_from_name(res.at("method").get<std::string>());
  r.result.region = parse_region(res.at("region").get<std::string>());
  r.result.evaluations = res.at("evaluations").get<std::uint64_t>();
  r.result.wall_time = res.at("wall_time").get<double>();
  r.result.seed = optional_from<std::uint64_t>(res, "seed");
  return r;
}

std::string format_degrees(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string format_roundtrip(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "region",       "method",       "work",         "alpha",     "beta",
      "gamma",        "alpha_err",    "beta_err",     "gamma_err", "stderr_alpha",
      "stderr_beta",  "stderr_gamma", "seed",         "wall_time_s"};
  return columns;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  const auto& columns = csv_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << '\n';
  const auto triple = [&](const std::optional<AngleTriple>& t) {
    if (t) {
      out << ',' << format_degrees(t->alpha) << ',' << format_degrees(t->beta) << ','
          << format_degrees(t->gamma);
    } else {
      out << ",,,";
    }
  };
  for (const CsvRow& row : rows) {
    out << csv_escape(row.region) << ',' << csv_escape(row.method) << ',' << row.work;
    triple(row.mean);
    triple(row.error);
    triple(row.std_error);
    out << ',';
    if (row.seed) out << *row.seed;
    out << ',';
    if (row.wall_time_s) out << format_degrees(*row.wall_time_s);
    out << '\n';
  }
}

}  // namespace polyangle
