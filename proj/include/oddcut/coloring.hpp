#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "oddcut/graph.hpp"

namespace oddcut {

// A 3-coloring as a value object: assignment[v] in {0,1,2}. Every coloring
// emitted by this module is proper; verify_coloring accepts arbitrary ones.
struct TriColoring {
    std::vector<int> assignment;

    std::array<int, 3> sizes() const;
    int width() const;  // largest class size minus smallest
    VertexSet class_of(int cls) const;

    bool operator==(const TriColoring&) const = default;
};

// Vertex counts by degree within an induced subgraph.
struct DegreeProfile {
    int s0 = 0;
    int s1 = 0;
    int s2 = 0;
    int s3 = 0;

    bool operator==(const DegreeProfile&) const = default;
};

struct ColoringVerdict {
    bool well_formed = false;  // assignment covers every vertex with a class in {0,1,2}
    bool proper = false;
    std::vector<std::pair<int, int>> violations;  // monochromatic edges, lex order
    std::array<int, 3> sizes{0, 0, 0};
    int width = 0;
    std::optional<bool> type_matches;  // set iff an expected type was given

    bool ok() const { return well_formed && proper && type_matches.value_or(true); }
};

// Degree counts of the subgraph induced by s.
DegreeProfile degree_profile(const CubicGraph& g, const VertexSet& s);

// Balanced 2-coloring of the (bipartite) subgraph induced by s: each
// component is 2-colored, component orientations are chosen greedily
// (largest imbalance first) to minimize the running size difference, and
// isolated vertices are assigned last, alternating into the lighter side.
// Errors: NotBipartite; BalanceInfeasible when the final difference exceeds
// one (possible only for sets sparser than the solver ever produces).
Bipartition equitable_bipartition(const CubicGraph& g, const VertexSet& s);

// The 3-coloring (I, larger side, smaller side) where the sides come from
// equitable_bipartition of V - I. Sizes are exactly
// (|I|, ceil((n-|I|)/2), floor((n-|I|)/2)). Requires I independent and
// G - I bipartite.
TriColoring semi_equitable(const CubicGraph& g, const VertexSet& i);

// One equalization step: returns a proper coloring whose largest class
// shrank by exactly one and smallest grew by exactly one. Tries, in order:
// a direct move, single-vertex relays through the middle class, an
// alternating-component swap between largest and smallest, component swaps
// through the middle class completed by a move, and finally bounded
// exhaustive recoloring (components of at most 20 vertices). Requires
// width >= 2; raises StepFailed when the whole cascade is exhausted.
TriColoring reduce_width(const CubicGraph& g, const TriColoring& c);

// Report on properness, class sizes, and width; when expected_type is
// given, the sorted size triples are compared. Never throws on bad input:
// malformed assignments are reported via well_formed.
ColoringVerdict verify_coloring(const CubicGraph& g, const TriColoring& c,
                                std::optional<std::array<int, 3>> expected_type = std::nullopt);

}  // namespace oddcut
