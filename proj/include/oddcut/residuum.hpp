#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oddcut/graph.hpp"

namespace oddcut {

// One non-bipartite component of G - I: its vertex set plus a shortest odd
// cycle inside it (ties broken as in shortest_odd_cycle).
struct OddComponent {
    VertexSet component;
    OddCycleWitness cycle;
};

// The odd-cycle structure of G - I. Components are listed by ascending
// smallest vertex; bipartite components are omitted.
struct ResiduumWitness {
    std::vector<OddComponent> odd_components;

    bool is_empty() const { return odd_components.empty(); }
};

// Induced K4-minus-an-edge on {u, w, a, b}: u, w lie in the independent set,
// are non-adjacent, and both are adjacent to the adjacent pair a, b.
// Normalized so u < w and a < b.
struct Diamond {
    int u = -1;
    int w = -1;
    int a = -1;
    int b = -1;

    bool operator==(const Diamond&) const = default;
};

// Evidence that a diamond is of the second kind: a 5-cycle u-a-w-c-d-u whose
// off-diamond vertices c, d share the neighbor x inside the independent set.
struct TypeTwoEntry {
    Diamond diamond;
    int c = -1;  // external neighbor of w, consecutive with d on the 5-cycle
    int d = -1;  // external neighbor of u
    int x = -1;  // common neighbor of c and d in the independent set

    bool operator==(const TypeTwoEntry&) const = default;
};

// Classification of the movable structure of an independent set: free
// vertices (f0), diamonds with no long odd cycle meeting them (f1), and
// diamonds whose meeting 5-cycles are neutralized by a common neighbor (f2).
// The three parts are pairwise disjoint by construction.
struct FreeClassification {
    VertexSet f0;
    std::vector<Diamond> f1;
    std::vector<TypeTwoEntry> f2;

    bool empty() const { return f0.empty() && f1.empty() && f2.empty(); }

    // Every independent-set vertex covered by the classification.
    VertexSet members() const;
};

// Per-component bipartiteness of G - I with one shortest odd cycle per odd
// component. Requires I independent (NotIndependent otherwise).
ResiduumWitness residuum(const CubicGraph& g, const VertexSet& i);

// All odd cycles of the subgraph induced by s, canonical and sorted by
// (length, lexicographic). Raises CapExceeded if more than cap exist.
std::vector<OddCycleWitness> enumerate_odd_cycles(const CubicGraph& g, const VertexSet& s,
                                                  long long cap = 1000000);

// Is w removable from I without changing the odd-cycle structure? True iff
// no two neighbors of w are joined by an odd simple path avoiding I.
// Requires w in I (NotMember otherwise).
bool is_free(const CubicGraph& g, const VertexSet& i, int w);

// Every diamond of g whose u, w pair lies in i. i need not be independent;
// a, b are required to lie outside i. Ordered by (a, b), then (u, w).
std::vector<Diamond> find_diamonds(const CubicGraph& g, const VertexSet& i);

// Full movable-structure classification of an independent set. Priority:
// free vertices first, then each diamond is tested for kind 1 before kind 2;
// a diamond whose u or w is already covered is skipped. Diamonds whose
// search exceeds the internal budget are conservatively left unclassified.
FreeClassification free_sets(const CubicGraph& g, const VertexSet& i);

// Simple path from `from` to `to` of the given parity (edge count mod 2)
// inside the subgraph induced by `allowed` (a mask of size g.n()). The edge
// skip_edge (unordered) is never traversed; {-1, -1} means none. Exhaustive
// DFS over simple paths with a step budget (CapExceeded beyond it);
// walk-parity pruning makes it cheap on the near-forests it is used on.
std::optional<std::vector<int>> parity_path(const CubicGraph& g, const std::vector<char>& allowed,
                                            int from, int to, int parity,
                                            std::pair<int, int> skip_edge = {-1, -1},
                                            long long budget = 2000000);

// Connected components of the subgraph induced by s, ordered by ascending
// smallest vertex.
std::vector<VertexSet> induced_components(const CubicGraph& g, const VertexSet& s);

}  // namespace oddcut
