#include "polyangle/region_string.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>
#include <vector>

#include "polyangle/errors.hpp"
#include "polyangle/report.hpp"

namespace polyangle {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(std::string_view token, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'",
                     std::string(token));
  }
  return value;
}

long long parse_integer(std::string_view token, const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'",
                     std::string(token));
  }
  return value;
}

RegionSpec parse_ngon(std::string_view body) {
  const auto parts = split(body, ':');
  if (parts.size() > 2) {
    throw ParseError("ngon takes ngon:<n>[:<side>], got extra field '" + std::string(parts[2]) +
                         "'",
                     std::string(parts[2]));
  }
  const long long n = parse_integer(parts[0], "polygon side count");
  if (n > 1'000'000 || n < -1'000'000) {
    throw ParseError("polygon side count out of range '" + std::string(parts[0]) + "'",
                     std::string(parts[0]));
  }
  const double side = parts.size() == 2 ? parse_double(parts[1], "side length") : 1.0;
  return RegularNGon{static_cast<int>(n), side};
}

RegionSpec parse_poly(std::string_view body) {
  ConvexPolygon poly;
  const std::size_t at = body.find('@');
  std::string_view list = body.substr(0, at);
  if (at != std::string_view::npos) {
    const std::string_view index = body.substr(at + 1);
    const long long k = parse_integer(index, "base edge index");
    if (k < 0) {
      throw ParseError("base edge index must be non-negative '" + std::string(index) + "'",
                       std::string(index));
    }
    poly.base_edge_index = static_cast<std::size_t>(k);
  }
  for (std::string_view vertex : split(list, ';')) {
    const auto xy = split(vertex, ',');
    if (xy.size() != 2) {
      throw ParseError("vertex must be <x>,<y>, got '" + std::string(vertex) + "'",
                       std::string(vertex));
    }
    poly.vertices.push_back({parse_double(xy[0], "x coordinate"), parse_double(xy[1], "y coordinate")});
  }
  return poly;
}

}  // namespace

RegionSpec parse_region(std::string_view text) {
  if (text == "square") return RegularNGon{4, 1.0};
  if (text == "circle") return CircleLimit{};
  if (text.starts_with("ngon:")) return parse_ngon(text.substr(5));
  if (text.starts_with("poly:")) return parse_poly(text.substr(5));
  const std::string head(text.substr(0, text.find(':')));
  throw ParseError("unknown region '" + head + "' (expected ngon, square, poly or circle)", head);
}

std::string format_region(const RegionSpec& spec) {
  if (std::holds_alternative<CircleLimit>(spec)) return "circle";
  if (const auto* ngon = std::get_if<RegularNGon>(&spec)) {
    std::string out = "ngon:" + std::to_string(ngon->n);
    if (ngon->side != 1.0) out += ":" + format_roundtrip(ngon->side);
    return out;
  }
  const auto& poly = std::get<ConvexPolygon>(spec);
  std::string out = "poly:";
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    if (i > 0) out += ";";
    out += format_roundtrip(poly.vertices[i].x) + "," + format_roundtrip(poly.vertices[i].y);
  }
  if (poly.base_edge_index != 0) out += "@" + std::to_string(poly.base_edge_index);
  return out;
}

std::string region_grammar_help() {
  return "ngon:<n>[:<side>]                      regular n-gon (n >= 3), side defaults to 1\n"
         "square                                 alias for ngon:4:1\n"
         "poly:<x0>,<y0>;<x1>,<y1>;...[@<base>]  convex CCW polygon, base edge index defaults to 0\n"
         "circle                                 n -> infinity limit (method predict only)\n";
}

}  // namespace polyangle
