#pragma once

#include <array>
#include <initializer_list>
#include <utility>
#include <vector>

namespace oddcut {

// Sorted set of vertex ids. Mutators preserve the order, so iteration is
// always ascending and set comparison is plain vector equality.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> items);
    VertexSet(std::initializer_list<int> items) : VertexSet(std::vector<int>(items)) {}

    bool contains(int v) const;
    void insert(int v);  // no-op if already present
    void erase(int v);   // no-op if absent

    int size() const { return static_cast<int>(items_.size()); }
    bool empty() const { return items_.empty(); }
    const std::vector<int>& items() const { return items_; }

    // membership bitmap over vertices 0..n-1
    std::vector<char> mask(int n) const;

    std::vector<int>::const_iterator begin() const { return items_.begin(); }
    std::vector<int>::const_iterator end() const { return items_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> items_;
};

VertexSet full_set(int n);
VertexSet complement(const VertexSet& s, int n);

// raises InvalidArgument unless all members of s lie in 0..n-1
void validate_subset(const VertexSet& s, int n, const char* what);

// Immutable simple 3-regular graph; adjacency lists are sorted.
class CubicGraph {
public:
    static CubicGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    const std::array<int, 3>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;

    // all edges as (min, max) pairs in lexicographic order
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const CubicGraph&) const = default;

private:
    explicit CubicGraph(std::vector<std::array<int, 3>> adj) : adj_(std::move(adj)) {}

    std::vector<std::array<int, 3>> adj_;
};

// Normal form of a cycle given as a vertex sequence (first vertex not
// repeated at the end): rotated so the smallest vertex leads, direction
// chosen as the lex-smaller of the two traversals.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

struct OddCycleWitness {
    std::vector<int> vertices;  // canonical form

    // canonicalizes; raises InvalidArgument unless the length is odd and >= 3
    static OddCycleWitness make(std::vector<int> cycle);

    int length() const { return static_cast<int>(vertices.size()); }

    bool operator==(const OddCycleWitness&) const = default;
    // shorter first, then lexicographic: a deterministic order for witness lists
    bool operator<(const OddCycleWitness& o) const {
        if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
        return vertices < o.vertices;
    }
};

// Two-sided split of some induced subgraph; every induced edge crosses sides.
struct Bipartition {
    VertexSet side_a;
    VertexSet side_b;
};

bool is_independent(const CubicGraph& g, const VertexSet& s);

}  // namespace oddcut
