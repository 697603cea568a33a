#include "oddcut/indset.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oddcut/errors.hpp"

namespace oddcut {

namespace {

void assert_independent(const CubicGraph& g, const VertexSet& s, const char* who) {
    if (!is_independent(g, s))
        raise(errc::result_not_independent, std::string(who) + " produced a dependent set");
}

// Branch-and-bound state with an undo trail so backtracking is O(removals).
struct MisSearch {
    const CubicGraph& g;
    long long budget;
    long long nodes = 0;
    std::vector<char> alive;
    std::vector<int> deg;
    int alive_count;
    std::vector<int> cur;
    std::vector<int> best;
    std::vector<int> trail;  // removal order, for undo

    explicit MisSearch(const CubicGraph& graph, long long node_budget)
        : g(graph),
          budget(node_budget),
          alive(graph.n(), 1),
          deg(graph.n(), 3),
          alive_count(graph.n()) {}

    void remove(int v) {
        alive[v] = 0;
        --alive_count;
        trail.push_back(v);
        for (int u : g.neighbors(v))
            if (alive[u]) --deg[u];
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            alive[v] = 1;
            ++alive_count;
            for (int u : g.neighbors(v))
                if (alive[u]) ++deg[u];
        }
    }

    void include(int v) {
        cur.push_back(v);
        remove(v);
        for (int u : g.neighbors(v))
            if (alive[u]) remove(u);
    }

    // After the forced moves no alive vertex has degree <= 1, so once the
    // maximum residual degree drops to 2 the alive subgraph is a disjoint
    // union of cycles: take floor(length/2) alternating vertices from each.
    void sweep_cycles() {
        std::vector<char> done(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) {
            if (!alive[v] || done[v]) continue;
            std::vector<int> seq{v};
            done[v] = 1;
            int prev = -1, at = v;
            for (;;) {
                int next = -1;
                for (int u : g.neighbors(at))
                    if (alive[u] && u != prev && !done[u]) {
                        next = u;
                        break;
                    }
                if (next == -1) break;
                done[next] = 1;
                seq.push_back(next);
                prev = at;
                at = next;
            }
            std::size_t take = seq.size() / 2;
            for (std::size_t i = 0; i < take; ++i) cur.push_back(seq[2 * i]);
        }
    }

    void search() {
        if (++nodes > budget)
            raise(errc::budget_exceeded,
                  "independent-set search exceeded " + std::to_string(budget) + " nodes");

        std::size_t mark = trail.size();
        std::size_t cur_mark = cur.size();

        // forced moves: degree-0 and degree-1 vertices are in some maximum set
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.n(); ++v)
                if (alive[v] && deg[v] <= 1) {
                    include(v);
                    changed = true;
                }
        }

        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
            if (alive[v] && (pick == -1 || deg[v] > deg[pick])) pick = v;

        if (pick == -1) {
            if (cur.size() > best.size()) best = cur;
        } else if (deg[pick] <= 2) {
            std::size_t sweep_mark = cur.size();
            sweep_cycles();
            if (cur.size() > best.size()) best = cur;
            cur.resize(sweep_mark);
        } else if (cur.size() + alive_count > best.size()) {  // size bound
            std::size_t m2 = trail.size();
            include(pick);
            search();
            undo_to(m2);
            cur.pop_back();
            remove(pick);  // exclude branch
            search();
            undo_to(m2);
        }

        undo_to(mark);
        cur.resize(cur_mark);
    }
};

}  // namespace

VertexSet greedy_mis(const CubicGraph& g, std::uint64_t seed) {
    int n = g.n();
    std::mt19937_64 rng(seed);
    // rank[v] = position of v in a seeded shuffle; the tie-break order
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng() % i]);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<char> alive(n, 1);
    std::vector<int> deg(n, 3);
    std::vector<int> out;
    int remaining = n;
    auto remove = [&](int v) {
        alive[v] = 0;
        --remaining;
        for (int u : g.neighbors(v))
            if (alive[u]) --deg[u];
    };
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (pick == -1 || deg[v] < deg[pick] ||
                (deg[v] == deg[pick] && rank[v] < rank[pick]))
                pick = v;
        }
        out.push_back(pick);
        auto nb = g.neighbors(pick);
        remove(pick);
        for (int u : nb)
            if (alive[u]) remove(u);
    }
    VertexSet s(std::move(out));
    assert_independent(g, s, "greedy_mis");
    return s;
}

VertexSet max_is(const CubicGraph& g, long long node_budget) {
    if (node_budget < 1) raise(errc::invalid_argument, "node_budget must be positive");
    MisSearch search(g, node_budget);
    search.search();
    VertexSet s(std::move(search.best));
    assert_independent(g, s, "max_is");
    return s;
}

VertexSet shrink_to(const VertexSet& I, int k) {
    if (k < 0) raise(errc::invalid_argument, "negative target size");
    if (k > I.size())
        raise(errc::k_too_large,
              "cannot keep " + std::to_string(k) + " of " + std::to_string(I.size()));
    std::vector<int> kept(I.items().begin(), I.items().begin() + k);
    return VertexSet(std::move(kept));
}

}  // namespace oddcut
