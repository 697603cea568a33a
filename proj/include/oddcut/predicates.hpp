#pragma once

#include <optional>
#include <variant>

#include <boost/rational.hpp>

#include "oddcut/graph.hpp"

namespace oddcut {

enum class GraphClass { Bipartite, K4, Tripartite };

constexpr const char* graph_class_name(GraphClass c) {
    switch (c) {
    case GraphClass::Bipartite: return "Bipartite";
    case GraphClass::K4: return "K4";
    case GraphClass::Tripartite: return "Tripartite";
    }
    return "?";
}

bool connected(const CubicGraph& g);

// Shortest odd cycle of the subgraph induced by s, or nullopt when that
// subgraph is bipartite. Ties are broken deterministically: lex-smallest
// canonical form among the minimum-length cycles found by the parity
// search over all start vertices.
std::optional<OddCycleWitness> shortest_odd_cycle(const CubicGraph& g, const VertexSet& s);

// Bipartition of the subgraph induced by s when it is bipartite (per
// component: smallest vertex goes to side_a), otherwise its shortest odd
// cycle.
std::variant<Bipartition, OddCycleWitness> bipartition_of(const CubicGraph& g, const VertexSet& s);

int girth(const CubicGraph& g);

// Brooks trichotomy for connected cubic graphs: chi = 2 (Bipartite),
// chi = 4 (K4, the unique cubic graph on 4 vertices), else chi = 3
// (Tripartite). Raises Disconnected on disconnected input.
GraphClass classify(const CubicGraph& g);

using Rational = boost::rational<long long>;

// Girth-parameterized upper bounds on the decycling number (the minimum
// number of vertices whose removal leaves a forest):
//   basic   = (g+1)/(4g-2) * n + (g-1)/(2g-1)      (holds for all cubic graphs)
//   refined = g/(4(g-1)) * n + (g-3)/(2g-2)        (tighter; fails on K4 and a
//                                                   few other small exceptions)
struct DecyclingBounds {
    Rational basic;
    Rational refined;
};

DecyclingBounds decycling_bounds(const CubicGraph& g);

}  // namespace oddcut
