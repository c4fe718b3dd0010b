#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "k4steiner/instance.hpp"

namespace k4st {

/// Text format:
///
///     VEST 1
///     SECTION Graph
///     Nodes 3
///     Edges 2
///     E 1 2 1.5
///     E 2 3 4
///     END
///     SECTION Terminals
///     T 1
///     T 3
///     END
///     SECTION VirtualEdges
///     VE 1 3 2 2 1 inf
///     END
///     EOF
///
/// Vertices are 1-based. END lines are optional; blank lines and lines
/// starting with '#' are ignored. Weights are nonnegative decimals
/// multiplied by 10^scale, which must make them integral; virtual edge
/// weights may also be "inf".

/// Throws Error(kParseError) naming the offending line.
Instance parse_instance(std::istream& in, int scale = 0);
Instance parse_instance(std::string_view text, int scale = 0);
Instance read_instance(const std::filesystem::path& path, int scale = 0);

/// Inverse of parse_instance for user instances.
std::string render_instance(const Instance& inst, int scale = 0);

/// Decimal string times 10^scale as an exact integer weight.
Weight parse_weight(std::string_view text, int scale, bool allow_infinity = false);
/// Integer weight divided by 10^scale, without trailing zeros.
std::string format_weight(Weight w, int scale);

}  // namespace k4st
