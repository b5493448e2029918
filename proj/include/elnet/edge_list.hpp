#pragma once

#include <istream>
#include <string_view>
#include <vector>

#include "elnet/network.hpp"

namespace elnet {

/// Edge-list text: one edge per line as `u v [c]`, whitespace separated.
/// Blank lines and lines whose first non-blank character is `#` are
/// skipped. A missing conductance means 1.
///
/// Errors carry the 1-based line number: ParseError for malformed lines,
/// SelfLoop and NonPositiveConductance for invalid edges. Whole-graph
/// errors (EmptyNetwork, Disconnected) come from build_network.
std::vector<WeightedEdge> parse_edge_list(std::string_view text);

Network parse_network_file(std::string_view text);
Network read_network(std::istream& in);

} // namespace elnet
