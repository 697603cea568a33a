#include "oddcut/coloring.hpp"

#include <algorithm>
#include <cstdlib>

#include "oddcut/errors.hpp"
#include "oddcut/predicates.hpp"
#include "oddcut/residuum.hpp"

namespace oddcut {

std::array<int, 3> TriColoring::sizes() const {
    std::array<int, 3> out{0, 0, 0};
    for (int cls : assignment)
        if (cls >= 0 && cls < 3) ++out[cls];
    return out;
}

int TriColoring::width() const {
    auto sz = sizes();
    auto [lo, hi] = std::minmax_element(sz.begin(), sz.end());
    return *hi - *lo;
}

VertexSet TriColoring::class_of(int cls) const {
    std::vector<int> out;
    for (int v = 0; v < (int)assignment.size(); ++v)
        if (assignment[v] == cls) out.push_back(v);
    return VertexSet(std::move(out));
}

DegreeProfile degree_profile(const CubicGraph& g, const VertexSet& s) {
    validate_subset(s, g.n(), "vertex set");
    std::vector<char> in_s = s.mask(g.n());
    DegreeProfile p;
    for (int v : s) {
        int deg = 0;
        for (int u : g.neighbors(v)) deg += in_s[u];
        (deg == 0 ? p.s0 : deg == 1 ? p.s1 : deg == 2 ? p.s2 : p.s3) += 1;
    }
    return p;
}

Bipartition equitable_bipartition(const CubicGraph& g, const VertexSet& s) {
    validate_subset(s, g.n(), "vertex set");
    std::vector<int> isolated;
    struct Piece {
        VertexSet x, y;  // x holds the component's smallest vertex
        int min_vertex;
    };
    std::vector<Piece> pieces;
    for (const VertexSet& comp : induced_components(g, s)) {
        if (comp.size() == 1) {
            isolated.push_back(*comp.begin());
            continue;
        }
        auto verdict = bipartition_of(g, comp);
        auto* sides = std::get_if<Bipartition>(&verdict);
        if (!sides)
            raise(errc::not_bipartite, "induced subgraph has an odd cycle, cannot 2-color");
        pieces.push_back({std::move(sides->side_a), std::move(sides->side_b), *comp.begin()});
    }

    // Largest imbalance first; orientation chosen to pull the running
    // difference toward zero, keeping the unflipped one on ties.
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        int ia = std::abs((int)a.x.size() - (int)a.y.size());
        int ib = std::abs((int)b.x.size() - (int)b.y.size());
        return ia > ib;
    });
    std::vector<int> a, b;
    int diff = 0;
    auto take = [&](const VertexSet& into_a, const VertexSet& into_b) {
        a.insert(a.end(), into_a.begin(), into_a.end());
        b.insert(b.end(), into_b.begin(), into_b.end());
        diff += (int)into_a.size() - (int)into_b.size();
    };
    for (const Piece& p : pieces) {
        int imb = (int)p.x.size() - (int)p.y.size();
        if (std::abs(diff + imb) <= std::abs(diff - imb))
            take(p.x, p.y);
        else
            take(p.y, p.x);
    }
    for (int v : isolated) {
        (diff <= 0 ? a : b).push_back(v);
        diff += diff <= 0 ? 1 : -1;
    }
    if (std::abs(diff) > 1)
        raise(errc::balance_infeasible, "component imbalances cannot be evened out to within one");
    return {VertexSet(std::move(a)), VertexSet(std::move(b))};
}

namespace {

void assert_proper(const CubicGraph& g, const TriColoring& c, const char* what) {
    if ((int)c.assignment.size() != g.n())
        raise(errc::step_failed, std::string(what) + ": coloring does not cover the graph");
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v])
            raise(errc::step_failed, std::string(what) + ": coloring is not proper");
}

}  // namespace

TriColoring semi_equitable(const CubicGraph& g, const VertexSet& i) {
    validate_subset(i, g.n(), "independent set");
    if (!is_independent(g, i))
        raise(errc::not_independent, "semi-equitable coloring requires an independent set");
    Bipartition sides = equitable_bipartition(g, complement(i, g.n()));
    const VertexSet& big = sides.side_a.size() >= sides.side_b.size() ? sides.side_a : sides.side_b;
    const VertexSet& small = sides.side_a.size() >= sides.side_b.size() ? sides.side_b : sides.side_a;

    TriColoring c;
    c.assignment.assign(g.n(), 0);
    for (int v : big) c.assignment[v] = 1;
    for (int v : small) c.assignment[v] = 2;
    int rest = g.n() - i.size();
    auto sz = c.sizes();
    if (sz != std::array<int, 3>{i.size(), (rest + 1) / 2, rest / 2})
        raise(errc::step_failed, "semi-equitable sizes drifted from the target type");
    assert_proper(g, c, "semi_equitable");
    return c;
}

namespace {

// Number of neighbors of v in class cls, optionally pretending one vertex
// is absent.
int neighbors_in_class(const CubicGraph& g, const std::vector<int>& assign, int v, int cls,
                       int absent = -1) {
    int count = 0;
    for (int u : g.neighbors(v))
        if (u != absent && assign[u] == cls) ++count;
    return count;
}

// Components of the subgraph induced by the two classes p and q, each with
// its per-class member lists. Ordered by smallest vertex.
struct KempeComponent {
    std::vector<int> in_p, in_q;
};

std::vector<KempeComponent> kempe_components(const CubicGraph& g, const std::vector<int>& assign,
                                             int p, int q) {
    int n = g.n();
    std::vector<char> seen(n, 0);
    std::vector<KempeComponent> out;
    for (int root = 0; root < n; ++root) {
        if (seen[root] || (assign[root] != p && assign[root] != q)) continue;
        KempeComponent comp;
        std::vector<int> queue{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            (assign[u] == p ? comp.in_p : comp.in_q).push_back(u);
            for (int v : g.neighbors(u)) {
                if (seen[v] || (assign[v] != p && assign[v] != q)) continue;
                seen[v] = 1;
                queue.push_back(v);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

void swap_component(std::vector<int>& assign, const KempeComponent& comp, int p, int q) {
    for (int v : comp.in_p) assign[v] = q;
    for (int v : comp.in_q) assign[v] = p;
}

// First vertex of class `from` with no neighbor in class `to`, or -1.
int movable_vertex(const CubicGraph& g, const std::vector<int>& assign, int from, int to) {
    for (int v = 0; v < g.n(); ++v)
        if (assign[v] == from && neighbors_in_class(g, assign, v, to) == 0) return v;
    return -1;
}

// Exhaustive proper recoloring of one component to exact per-class targets;
// everything outside the component keeps its colors (and has no edges into
// it). Returns success; assign is restored on failure.
bool recolor_component(const CubicGraph& g, std::vector<int>& assign, const VertexSet& comp,
                       std::array<int, 3> target) {
    std::vector<int> verts(comp.begin(), comp.end());
    std::vector<int> saved;
    saved.reserve(verts.size());
    for (int v : verts) saved.push_back(assign[v]);
    long long nodes = 0;
    const long long node_budget = 5000000;

    auto rec = [&](auto&& self, std::size_t at) -> bool {
        if (++nodes > node_budget) return false;
        if (at == verts.size()) return true;
        int v = verts[at];
        for (int cls = 0; cls < 3; ++cls) {
            if (target[cls] == 0) continue;
            bool clash = false;
            for (int u : g.neighbors(v)) clash = clash || (u < v && comp.contains(u) && assign[u] == cls);
            if (clash) continue;
            assign[v] = cls;
            --target[cls];
            if (self(self, at + 1)) return true;
            ++target[cls];
        }
        return false;
    };
    if (rec(rec, 0)) return true;
    for (std::size_t k = 0; k < verts.size(); ++k) assign[verts[k]] = saved[k];
    return false;
}

}  // namespace

TriColoring reduce_width(const CubicGraph& g, const TriColoring& c) {
    if (!verify_coloring(g, c).ok())
        raise(errc::invalid_argument, "reduce_width requires a proper coloring");
    if (c.width() < 2) raise(errc::invalid_argument, "reduce_width requires width at least 2");

    auto sz = c.sizes();
    int big = 0, small = 0;
    for (int cls = 1; cls < 3; ++cls) {
        if (sz[cls] > sz[big]) big = cls;
        if (sz[cls] < sz[small]) small = cls;
    }
    int mid = 3 - big - small;
    std::array<int, 3> want = sz;
    --want[big];
    ++want[small];

    TriColoring out = c;
    std::vector<int>& assign = out.assignment;
    auto finish = [&]() {
        if (out.sizes() != want) raise(errc::step_failed, "equalization changed the wrong classes");
        assert_proper(g, out, "reduce_width");
        return out;
    };

    // (a) direct move from the largest class into the smallest
    if (int v = movable_vertex(g, assign, big, small); v >= 0) {
        assign[v] = small;
        return finish();
    }

    // (a') relay through the middle class: u leaves mid for small, v
    // replaces it from big
    for (int v = 0; v < g.n(); ++v) {
        if (assign[v] != big) continue;
        for (int u = 0; u < g.n(); ++u) {
            if (assign[u] != mid || neighbors_in_class(g, assign, u, small) > 0) continue;
            if (neighbors_in_class(g, assign, v, mid, u) > 0) continue;
            assign[u] = small;
            assign[v] = mid;
            return finish();
        }
    }

    // (b) alternating big/small component whose swap nets one transfer
    for (const KempeComponent& comp : kempe_components(g, assign, big, small)) {
        if ((int)comp.in_p.size() - (int)comp.in_q.size() != 1) continue;
        swap_component(assign, comp, big, small);
        return finish();
    }

    // (b') component swap through the middle class, completed by a move
    for (const KempeComponent& comp : kempe_components(g, assign, big, mid)) {
        if ((int)comp.in_p.size() - (int)comp.in_q.size() != 1) continue;
        swap_component(assign, comp, big, mid);  // big -1, mid +1
        if (int u = movable_vertex(g, assign, mid, small); u >= 0) {
            assign[u] = small;
            return finish();
        }
        swap_component(assign, comp, mid, big);  // revert
    }
    for (const KempeComponent& comp : kempe_components(g, assign, mid, small)) {
        if ((int)comp.in_p.size() - (int)comp.in_q.size() != 1) continue;
        swap_component(assign, comp, mid, small);  // mid -1, small +1
        if (int v = movable_vertex(g, assign, big, mid); v >= 0) {
            assign[v] = mid;
            return finish();
        }
        swap_component(assign, comp, small, mid);  // revert
    }

    // (c) bounded exhaustive recoloring of one component to the target
    for (const VertexSet& comp : induced_components(g, full_set(g.n()))) {
        if (comp.size() > 20) continue;
        std::array<int, 3> target{0, 0, 0};
        for (int v : comp) ++target[assign[v]];
        --target[big];
        ++target[small];
        if (target[big] < 0 || target[small] > (int)comp.size()) continue;
        if (recolor_component(g, assign, comp, target)) return finish();
    }

    raise(errc::step_failed,
          "equalization cascade exhausted: no single transfer from the largest to the smallest "
          "class was found");
}

ColoringVerdict verify_coloring(const CubicGraph& g, const TriColoring& c,
                                std::optional<std::array<int, 3>> expected_type) {
    ColoringVerdict v;
    v.well_formed = (int)c.assignment.size() == g.n() &&
                    std::all_of(c.assignment.begin(), c.assignment.end(),
                                [](int cls) { return cls >= 0 && cls <= 2; });
    if (v.well_formed) {
        for (auto [x, y] : g.edges())
            if (c.assignment[x] == c.assignment[y]) v.violations.emplace_back(x, y);
        v.proper = v.violations.empty();
        v.sizes = c.sizes();
        v.width = c.width();
    }
    if (expected_type) {
        std::array<int, 3> got = v.sizes, want = *expected_type;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        v.type_matches = v.well_formed && got == want;
    }
    return v;
}

}  // namespace oddcut
