#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyangle/estimators.hpp"

namespace polyangle {

inline constexpr const char* kToolVersion = "0.1.0";

/// Method parameters echoed into a RunRecord; fields not used by the
/// method stay empty.
struct ConfigEcho {
  std::optional<int> grid_resolution;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> chunk_size;
  std::optional<int> gauss_order;
  std::optional<int> refinement_levels;

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct RunRecord {
  EstimateResult result;
  std::string tool_version = kToolVersion;
  std::string region_string;
  std::string method_string;
  ConfigEcho config;
  std::string timestamp;  // ISO 8601, UTC

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Current UTC time as YYYY-MM-DDThh:mm:ssZ.
std::string iso8601_now();

RunRecord make_record(const EstimateResult& result, const std::string& region_string,
                      const std::string& method_string, const ConfigEcho& config);

nlohmann::json to_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& j);

/// 15 significant digits.
std::string format_degrees(double value);

/// Shortest string that parses back to the same double.
std::string format_roundtrip(double value);

/// Column order of the convergence CSV.
const std::vector<std::string>& csv_columns();

struct CsvRow {
  std::string region;
  std::string method;
  std::uint64_t work = 0;
  AngleTriple mean;
  std::optional<AngleTriple> error;
  std::optional<AngleTriple> std_error;
  std::optional<std::uint64_t> seed;
  std::optional<double> wall_time_s;
};

/// RFC 4180 quoting; LF line endings.
std::string csv_escape(const std::string& field);
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

}  // namespace polyangle
