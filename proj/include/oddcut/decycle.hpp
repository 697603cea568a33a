#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "oddcut/coloring.hpp"
#include "oddcut/graph.hpp"
#include "oddcut/residuum.hpp"

namespace oddcut {

// A shortest path from a target odd cycle to the movable structure F(I).
// vertices[0] lies on the cycle, the last vertex is the reached F(I) member,
// and no interior vertex belongs to F(I). Indices are 0-based throughout.
// The flags are snapshots taken against the set the path was built for:
// in_set[p] marks membership of vertices[p] in I, surrounded[p] marks a
// vertex outside I all three of whose neighbors lie in I.
struct PathP {
    std::vector<int> vertices;
    std::vector<char> in_set;
    std::vector<char> surrounded;

    int size() const { return static_cast<int>(vertices.size()); }
    int last() const { return size() - 1; }

    bool operator==(const PathP&) const = default;
};

// How one elimination round ended.
//  deg3_absorb    a cycle vertex with no neighbor in the set was added
//  end_swap       the alternating interchange consumed the whole path
//  trigger_swap   the interchange stopped before a vertex surrounded by the set
//  harmless_break no odd cycle runs through the broken alternation edge
//  cycle_absorb   a vertex of the cycle through the broken edge was added
enum class SolveCase {
    deg3_absorb,
    end_swap,
    trigger_swap,
    harmless_break,
    cycle_absorb,
};

constexpr const char* solve_case_name(SolveCase c) {
    switch (c) {
    case SolveCase::deg3_absorb: return "Deg3Absorb";
    case SolveCase::end_swap: return "EndSwap";
    case SolveCase::trigger_swap: return "TriggerSwap";
    case SolveCase::harmless_break: return "HarmlessBreak";
    case SolveCase::cycle_absorb: return "CycleAbsorb";
    }
    return "UnknownCase";
}

// One round of bipartize: the cycle it targeted, how the round ended, and
// the set sizes on entry and exit (never decreasing).
struct IterationRecord {
    OddCycleWitness cycle;
    SolveCase case_taken = SolveCase::deg3_absorb;
    int size_before = 0;
    int size_after = 0;

    bool operator==(const IterationRecord&) const = default;
};

struct SolveTrace {
    std::vector<IterationRecord> iterations;

    int rounds() const { return static_cast<int>(iterations.size()); }

    bool operator==(const SolveTrace&) const = default;
};

// Per-round callback for bipartize: the set before the round, the cycle that
// was targeted, the set after, and the way the round ended. Used by the
// validation harness to check every round against brute-force oracles.
struct RoundView {
    const VertexSet& before;
    const OddCycleWitness& cycle;
    const VertexSet& after;
    SolveCase case_taken;
};
using RoundObserver = std::function<void(const RoundView&)>;

// Result of solve: the independent set of the requested size, a proper
// 3-coloring with that set as class 0 (the two remaining classes cover the
// bipartite rest), the elimination trace, and the independence number used
// for the feasibility bounds.
struct Solution {
    VertexSet set;
    TriColoring coloring;
    SolveTrace trace;
    int alpha = 0;
};

// Shortest path from any vertex of the cycle to any member of f, with no
// interior vertex in f. Multi-source layered search; ties are broken by the
// smallest reachable end vertex, then by the lexicographically smallest
// vertex sequence. Requires every cycle vertex to have degree 2 in G - I
// (InvalidArgument otherwise); raises NoFreeVertex when f is empty.
PathP find_path(const CubicGraph& g, const VertexSet& i, const OddCycleWitness& cycle,
                const FreeClassification& f);

// Last index of the alternating run that starts at `in`: walks
// out-in-out-in... from vertices[in] and returns the final position of the
// longest prefix that alternates, stopping early at a surrounded vertex.
// The returned index points at the path end (run consumed the whole path),
// at a surrounded vertex, or at the first of two consecutive out-of-set
// vertices. Requires vertices[in] outside the set (BadStart otherwise).
int alternating_path(const PathP& p, int in);

// The interchange along the segment [in, out]: odd offsets leave the set,
// even offsets enter it. A segment ending outside the set keeps its final
// vertex untouched. When the swap consumes the path end and that vertex is
// a diamond tip, the partner tip leaves the set and one interior vertex
// enters (the choice is checked for independence, with fallback to the
// other interior). The segment must alternate starting outside the set
// (NotAlternating), a consumed end must be an f member (InvalidArgument),
// and the result is verified independent (ResultNotIndependent).
VertexSet new_independent_set(const CubicGraph& g, const PathP& p, int in, int out,
                              const VertexSet& i, const FreeClassification& f);

// Handles a broken alternation at position `in`: examines the edge
// {vertices[in-1], vertices[in]}, whose endpoints must both lie outside the
// current set, as must vertices[in+1] (InvalidArgument otherwise). Returns
//   (in, i)        no odd cycle of G - i runs through that edge;
//   (last, i + v)  such a cycle exists and carries a vertex v with no
//                  neighbor in i, smallest such v absorbed;
//   (t, i)         such a cycle exists, all its vertices have a neighbor in
//                  i, and t > in is the highest path position on it; the
//                  alternating treatment continues from t.
std::pair<int, VertexSet> non_alternating_path(const CubicGraph& g, const PathP& p, int in,
                                               const VertexSet& i);

// Destroys the given odd cycle of G - I: either absorbs a cycle vertex with
// no neighbor in I, or walks the path from find_path through alternating
// interchanges until a terminal round. The result is independent, at least
// as large as I, and meets the cycle. Raises NoFreeVertex when the movable
// structure is empty and IterationCapExceeded after n segment steps.
VertexSet break_cycle(const CubicGraph& g, const VertexSet& i, const OddCycleWitness& cycle);

// Repeatedly destroys a shortest odd cycle of G - I (ties by lexicographic
// vertex sequence) until none remain. Requires I independent with
// 10|I| >= 4n (ThresholdNotMet). The trace records every round; the round
// count is capped at n^2 (IterationCapExceeded). The observer, when given,
// sees every round as it completes.
std::pair<VertexSet, SolveTrace> bipartize(const CubicGraph& g, const VertexSet& i,
                                           const RoundObserver& observer = {});

// An independent set of size exactly k whose removal leaves G bipartite,
// together with a proper 3-coloring exhibiting it. Requires a connected
// cubic graph with chromatic number 3 (NotTripartite), an independence
// number alpha with 10*alpha >= 4n (ThresholdNotMet), and
// floor((n - alpha)/2) <= k <= alpha (KOutOfRange). alpha comes from the
// exact solver, falling back to the greedy one on budget exhaustion. For
// k below ceil(n/3) the set is one side of a balanced split under an
// oversized class; BalanceFailed when neither candidate size splits. The
// observer is forwarded to every bipartize run.
Solution solve(const CubicGraph& g, int k, const RoundObserver& observer = {});

}  // namespace oddcut
