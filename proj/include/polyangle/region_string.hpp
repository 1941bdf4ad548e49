#pragma once

#include <string>
#include <string_view>

#include "polyangle/geometry.hpp"

namespace polyangle {

/// Parses the region grammar:
///   ngon:<n>[:<side>]                      side defaults to 1
///   square                                 alias for ngon:4:1
///   poly:<x0>,<y0>;<x1>,<y1>;...[@<base>]  base edge index defaults to 0
///   circle                                 prediction only
/// Throws ParseError naming the offending token. Geometric validity is
/// checked later by build_region().
RegionSpec parse_region(std::string_view text);

/// Inverse of parse_region up to number formatting (shortest round-trip).
std::string format_region(const RegionSpec& spec);

/// One line per grammar form, for the `shapes` subcommand.
std::string region_grammar_help();

}  // namespace polyangle
