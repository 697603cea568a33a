#include "oddcut/gen.hpp"

#include <random>
#include <utility>
#include <vector>

#include "oddcut/errors.hpp"
#include "oddcut/predicates.hpp"

namespace oddcut {

namespace {

// Fisher-Yates with explicit modulo draw: std::shuffle's permutation is
// implementation-defined, this one is pinned down by the mt19937_64 stream.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

CubicGraph random_cubic(const GenSpec& spec) {
    if (spec.n < 4 || spec.n % 2 != 0)
        raise(errc::invalid_argument,
              "cubic graphs need an even vertex count >= 4, got " + std::to_string(spec.n));
    if (spec.max_attempts < 1) raise(errc::invalid_argument, "max_attempts must be positive");

    std::mt19937_64 rng(spec.seed);
    std::vector<int> stubs(3 * spec.n);  // half-edge i belongs to vertex i/3
    for (int i = 0; i < 3 * spec.n; ++i) stubs[i] = i / 3;

    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        seeded_shuffle(stubs, rng);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(3 * spec.n / 2);
        bool simple = true;
        std::vector<char> seen(static_cast<std::size_t>(spec.n) * spec.n, 0);
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                simple = false;  // loop
            } else {
                auto& cell = seen[static_cast<std::size_t>(std::min(u, v)) * spec.n +
                                  std::max(u, v)];
                if (cell) simple = false;  // parallel edge
                cell = 1;
                edges.emplace_back(u, v);
            }
        }
        if (!simple) continue;
        auto g = CubicGraph::from_edges(spec.n, edges);
        if (!connected(g)) continue;
        if (classify(g) != GraphClass::Tripartite) continue;
        return g;
    }
    raise(errc::generation_exhausted, "no admissible graph after " +
                                          std::to_string(spec.max_attempts) + " attempts (n=" +
                                          std::to_string(spec.n) + ", seed=" +
                                          std::to_string(spec.seed) + ")");
}

CubicGraph named(const std::string& name) {
    using E = std::vector<std::pair<int, int>>;
    if (name == "k4") return CubicGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "prism")
        return CubicGraph::from_edges(
            6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "k33") {
        E es;
        for (int a : {0, 1, 2})
            for (int b : {3, 4, 5}) es.emplace_back(a, b);
        return CubicGraph::from_edges(6, es);
    }
    if (name == "petersen") {
        E es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};         // outer cycle
        for (int i = 0; i < 5; ++i) es.emplace_back(i, i + 5);  // spokes
        for (int i = 0; i < 5; ++i) es.emplace_back(5 + i, 5 + (i + 2) % 5);  // pentagram
        return CubicGraph::from_edges(10, es);
    }
    if (name == "moebius_kantor") {
        // generalized Petersen GP(8,3)
        E es;
        for (int i = 0; i < 8; ++i) {
            es.emplace_back(i, (i + 1) % 8);
            es.emplace_back(i, 8 + i);
            es.emplace_back(8 + i, 8 + (i + 3) % 8);
        }
        return CubicGraph::from_edges(16, es);
    }
    if (name == "twin_diamond") {
        // diamonds {0,1,2,3} (missing 0-1) and {4,5,6,7} (missing 4-5),
        // joined by 0-4 and 1-5
        return CubicGraph::from_edges(8, {{0, 2},
                                          {0, 3},
                                          {1, 2},
                                          {1, 3},
                                          {2, 3},
                                          {4, 6},
                                          {4, 7},
                                          {5, 6},
                                          {5, 7},
                                          {6, 7},
                                          {0, 4},
                                          {1, 5}});
    }
    raise(errc::unknown_name, "no graph named '" + name + "'");
}

}  // namespace oddcut
