#pragma once

#include <string>
#include <string_view>

#include "oddcut/graph.hpp"

namespace oddcut {

// Strict graph6 decoder: exact payload length, bytes in [63,126], zero
// padding bits, long vertex-count form rejected for n < 63. The decoded
// graph must be cubic and simple (graph6 cannot express non-simple graphs,
// so NotSimple is unreachable here).
CubicGraph parse_graph6(std::string_view text);

// Encoding under the graph's own vertex labeling (no relabeling), so
// parse_graph6(to_graph6(g)) == g and to_graph6(parse_graph6(s)) == s.
std::string to_graph6(const CubicGraph& g);

}  // namespace oddcut
