#include "oddcut/predicates.hpp"

#include <algorithm>
#include <limits>

#include "oddcut/errors.hpp"

namespace oddcut {

bool connected(const CubicGraph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head)
        for (int v : g.neighbors(queue[head]))
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
    return static_cast<int>(queue.size()) == g.n();
}

std::optional<OddCycleWitness> shortest_odd_cycle(const CubicGraph& g, const VertexSet& s) {
    validate_subset(s, g.n(), "shortest_odd_cycle");
    auto in = s.mask(g.n());
    int best = std::numeric_limits<int>::max();
    std::vector<std::vector<int>> found;

    // Parity search from each source: state (v, parity of walk length).
    // A minimum-length odd closed walk is necessarily a simple cycle, so the
    // global minimum over sources is the shortest odd cycle; walks tied at a
    // longer interim length may be non-simple and are just skipped.
    std::vector<int> dist(2 * g.n()), par(2 * g.n());
    for (int src : s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        std::vector<int> queue{2 * src};
        dist[2 * src] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int state = queue[head];
            int u = state / 2, p = state % 2;
            for (int v : g.neighbors(u)) {
                if (!in[v]) continue;
                int next = 2 * v + (p ^ 1);
                if (dist[next] == -1) {
                    dist[next] = dist[state] + 1;
                    par[next] = state;
                    queue.push_back(next);
                }
            }
        }
        for (int v : g.neighbors(src)) {
            if (!in[v] || dist[2 * v] <= 0) continue;  // even-parity walk src -> v
            int len = dist[2 * v] + 1;                 // close with edge v -> src
            if (len > best) continue;
            std::vector<int> walk;
            for (int state = 2 * v; state != -1; state = par[state]) walk.push_back(state / 2);
            std::reverse(walk.begin(), walk.end());  // src ... v
            auto sorted = walk;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            if (len < best) {
                best = len;
                found.clear();
            }
            found.push_back(std::move(walk));
        }
    }

    if (found.empty()) return std::nullopt;
    std::vector<int> winner = canonical_cycle(found[0]);
    for (size_t i = 1; i < found.size(); ++i) {
        auto c = canonical_cycle(found[i]);
        if (c < winner) winner = std::move(c);
    }
    return OddCycleWitness::make(std::move(winner));
}

std::variant<Bipartition, OddCycleWitness> bipartition_of(const CubicGraph& g, const VertexSet& s) {
    validate_subset(s, g.n(), "bipartition_of");
    auto in = s.mask(g.n());
    std::vector<int> color(g.n(), -1);
    for (int root : s) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> queue{root};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (!in[v]) continue;
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return *shortest_odd_cycle(g, s);
                }
            }
        }
    }
    std::vector<int> a, b;
    for (int v : s) (color[v] == 0 ? a : b).push_back(v);
    return Bipartition{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

int girth(const CubicGraph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.n()), par(g.n());
    for (int src = 0; src < g.n() && best > 3; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        std::vector<int> queue{src};
        dist[src] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    queue.push_back(v);
                } else if (v != par[u]) {
                    // non-tree edge closes a walk of this length through src;
                    // minimized over all sources this attains the girth
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

GraphClass classify(const CubicGraph& g) {
    if (!connected(g)) raise(errc::disconnected, "classification requires a connected graph");
    if (g.n() == 4) return GraphClass::K4;  // the only cubic graph on 4 vertices
    auto r = bipartition_of(g, full_set(g.n()));
    return std::holds_alternative<Bipartition>(r) ? GraphClass::Bipartite : GraphClass::Tripartite;
}

DecyclingBounds decycling_bounds(const CubicGraph& g) {
    long long gg = girth(g);
    long long n = g.n();
    return DecyclingBounds{
        Rational(gg + 1, 4 * gg - 2) * n + Rational(gg - 1, 2 * gg - 1),
        Rational(gg, 4 * (gg - 1)) * n + Rational(gg - 3, 2 * gg - 2),
    };
}

}  // namespace oddcut
