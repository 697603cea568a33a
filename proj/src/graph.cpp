#include "oddcut/graph.hpp"

#include <algorithm>
#include <string>

#include "oddcut/errors.hpp"

namespace oddcut {

VertexSet::VertexSet(std::vector<int> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it != items_.end() && *it == v) items_.erase(it);
}

std::vector<char> VertexSet::mask(int n) const {
    std::vector<char> m(n, 0);
    for (int v : items_) m[v] = 1;
    return m;
}

VertexSet full_set(int n) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return VertexSet(std::move(all));
}

VertexSet complement(const VertexSet& s, int n) {
    validate_subset(s, n, "complement");
    auto m = s.mask(n);
    std::vector<int> out;
    out.reserve(n - s.size());
    for (int v = 0; v < n; ++v)
        if (!m[v]) out.push_back(v);
    return VertexSet(std::move(out));
}

void validate_subset(const VertexSet& s, int n, const char* what) {
    if (!s.empty() && (s.items().front() < 0 || s.items().back() >= n))
        raise(errc::invalid_argument,
              std::string(what) + ": vertex set not within 0.." + std::to_string(n - 1));
}

CubicGraph CubicGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 4)
        raise(errc::not_cubic, "a cubic graph has at least 4 vertices, got " + std::to_string(n));
    std::vector<std::vector<int>> nb(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(errc::invalid_argument, "edge endpoint out of range: " + std::to_string(u) + "-" +
                                              std::to_string(v));
        if (u == v) raise(errc::not_simple, "self-loop at vertex " + std::to_string(u));
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    std::vector<std::array<int, 3>> adj(n);
    for (int v = 0; v < n; ++v) {
        std::sort(nb[v].begin(), nb[v].end());
        if (std::adjacent_find(nb[v].begin(), nb[v].end()) != nb[v].end())
            raise(errc::not_simple, "duplicate edge at vertex " + std::to_string(v));
        if (nb[v].size() != 3)
            raise(errc::not_cubic, "vertex " + std::to_string(v) + " has degree " +
                                       std::to_string(nb[v].size()));
        std::copy(nb[v].begin(), nb[v].end(), adj[v].begin());
    }
    return CubicGraph(std::move(adj));
}

bool CubicGraph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return nb[0] == v || nb[1] == v || nb[2] == v;
}

std::vector<std::pair<int, int>> CubicGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(3 * n() / 2);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    int len = static_cast<int>(cycle.size());
    int p = static_cast<int>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::vector<int> fwd(len), rev(len);
    for (int i = 0; i < len; ++i) {
        fwd[i] = cycle[(p + i) % len];
        rev[i] = cycle[(p - i + len) % len];
    }
    return std::min(fwd, rev);
}

OddCycleWitness OddCycleWitness::make(std::vector<int> cycle) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0)
        raise(errc::invalid_argument,
              "odd cycle witness needs odd length >= 3, got " + std::to_string(cycle.size()));
    return OddCycleWitness{canonical_cycle(cycle)};
}

bool is_independent(const CubicGraph& g, const VertexSet& s) {
    for (int v : s)
        for (int u : g.neighbors(v))
            if (u > v && s.contains(u)) return false;
    return true;
}

}  // namespace oddcut
