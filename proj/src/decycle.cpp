#include "oddcut/decycle.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <variant>
#include <vector>

#include "oddcut/errors.hpp"
#include "oddcut/indset.hpp"
#include "oddcut/predicates.hpp"

namespace oddcut {

namespace {

bool meets(const VertexSet& s, const std::vector<int>& verts) {
    for (int v : verts)
        if (s.contains(v)) return true;
    return false;
}

int live_degree(const CubicGraph& g, const VertexSet& i, int v) {
    int d = 0;
    for (int nb : g.neighbors(v))
        if (!i.contains(nb)) ++d;
    return d;
}

void check_cycle_in_rest(const CubicGraph& g, const VertexSet& i, const OddCycleWitness& cycle) {
    const auto& cv = cycle.vertices;
    int m = static_cast<int>(cv.size());
    if (m < 3) raise(errc::invalid_argument, "cycle too short");
    for (int p = 0; p < m; ++p) {
        int v = cv[p];
        if (v < 0 || v >= g.n()) raise(errc::invalid_argument, "cycle vertex out of range");
        if (i.contains(v)) raise(errc::invalid_argument, "cycle vertex inside the set");
        if (!g.adjacent(v, cv[(p + 1) % m])) raise(errc::invalid_argument, "cycle edge missing");
    }
}

}  // namespace

PathP find_path(const CubicGraph& g, const VertexSet& i, const OddCycleWitness& cycle,
                const FreeClassification& f) {
    int n = g.n();
    validate_subset(i, n, "independent set");
    check_cycle_in_rest(g, i, cycle);
    for (int v : cycle.vertices)
        if (live_degree(g, i, v) != 2)
            raise(errc::invalid_argument, "cycle vertex not of degree 2 outside the set");
    if (f.empty()) raise(errc::no_free_vertex, "movable structure is empty");

    std::vector<char> target = f.members().mask(n);

    // distance from the cycle; targets are endpoints, never passed through
    std::vector<int> dist(n, -1);
    std::queue<int> bfs;
    for (int v : cycle.vertices)
        if (dist[v] < 0) {
            dist[v] = 0;
            bfs.push(v);
        }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (target[u]) continue;
        for (int nb : g.neighbors(u))
            if (dist[nb] < 0) {
                dist[nb] = dist[u] + 1;
                bfs.push(nb);
            }
    }
    int w = -1;
    for (int v = 0; v < n; ++v) {
        if (!target[v] || dist[v] < 0) continue;
        if (w < 0 || dist[v] < dist[w]) w = v;
    }
    if (w < 0) raise(errc::no_free_vertex, "no movable vertex reachable from the cycle");
    int len = dist[w];

    // distance to w with the same traversal rule, for the layered descent
    std::vector<int> dw(n, -1);
    dw[w] = 0;
    std::queue<int> back;
    back.push(w);
    while (!back.empty()) {
        int u = back.front();
        back.pop();
        if (target[u] && u != w) continue;
        for (int nb : g.neighbors(u))
            if (dw[nb] < 0) {
                dw[nb] = dw[u] + 1;
                back.push(nb);
            }
    }
    int v0 = -1;
    for (int v : cycle.vertices)
        if (dw[v] == len && (v0 < 0 || v < v0)) v0 = v;
    if (v0 < 0) raise(errc::step_failed, "layered searches disagree on the path length");

    PathP p;
    p.vertices.reserve(len + 1);
    p.vertices.push_back(v0);
    int cur = v0;
    for (int layer = len - 1; layer >= 0; --layer) {
        int next = -1;
        for (int nb : g.neighbors(cur)) {
            if (dw[nb] != layer) continue;
            if (layer > 0 && target[nb]) continue;
            if (next < 0 || nb < next) next = nb;
        }
        if (next < 0) raise(errc::step_failed, "layered descent lost the path");
        p.vertices.push_back(next);
        cur = next;
    }

    int k = p.size();
    p.in_set.resize(k);
    p.surrounded.resize(k);
    for (int q = 0; q < k; ++q) {
        int v = p.vertices[q];
        p.in_set[q] = i.contains(v) ? 1 : 0;
        char sur = 0;
        if (!p.in_set[q]) {
            sur = 1;
            for (int nb : g.neighbors(v))
                if (!i.contains(nb)) {
                    sur = 0;
                    break;
                }
        }
        p.surrounded[q] = sur;
    }
    return p;
}

int alternating_path(const PathP& p, int in) {
    int k = p.size();
    if (k < 1 || static_cast<int>(p.in_set.size()) != k ||
        static_cast<int>(p.surrounded.size()) != k)
        raise(errc::invalid_argument, "malformed path");
    if (in < 0 || in >= k) raise(errc::invalid_argument, "start position out of range");
    if (p.in_set[in]) raise(errc::bad_start, "alternating run must start outside the set");
    if (in == k - 1) return in;
    int idx = in;
    for (;;) {
        if (idx < k - 1) ++idx;
        if (!p.in_set[idx]) return idx - 1;
        if (idx == k - 1) return idx;
        ++idx;
        if (p.surrounded[idx]) return idx;
    }
}

VertexSet new_independent_set(const CubicGraph& g, const PathP& p, int in, int out,
                              const VertexSet& i, const FreeClassification& f) {
    int k = p.size();
    if (in < 0 || out < in || out >= k) raise(errc::invalid_argument, "segment out of range");
    validate_subset(i, g.n(), "independent set");
    for (int q = in; q <= out; ++q) {
        int v = p.vertices[q];
        if (v < 0 || v >= g.n()) raise(errc::invalid_argument, "path vertex out of range");
        if (i.contains(v) != ((q - in) % 2 == 1))
            raise(errc::not_alternating, "segment does not alternate from outside the set");
    }
    int e = i.contains(p.vertices[out]) ? out : out - 1;
    VertexSet j = i;
    for (int q = in; q <= e; ++q) {
        int v = p.vertices[q];
        if ((q - in) % 2 == 0)
            j.insert(v);
        else
            j.erase(v);
    }
    if (e == k - 1) {
        int end = p.vertices[k - 1];
        const Diamond* dia = nullptr;
        bool second_kind = false;
        for (const auto& d : f.f1)
            if (d.u == end || d.w == end) {
                dia = &d;
                break;
            }
        if (!dia)
            for (const auto& t : f.f2)
                if (t.diamond.u == end || t.diamond.w == end) {
                    dia = &t.diamond;
                    second_kind = true;
                    break;
                }
        if (dia) {
            // the partner tip leaves with the end vertex; one interior joins.
            // Preference: smaller interior for the first kind, larger for the
            // second, falling back when the preferred choice collides.
            int partner = dia->u == end ? dia->w : dia->u;
            int pick = second_kind ? std::max(dia->a, dia->b) : std::min(dia->a, dia->b);
            int other = dia->a + dia->b - pick;
            VertexSet cand = j;
            cand.erase(partner);
            cand.insert(pick);
            if (!is_independent(g, cand)) {
                cand = j;
                cand.erase(partner);
                cand.insert(other);
            }
            j = cand;
        } else if (!f.f0.contains(end)) {
            raise(errc::invalid_argument, "consumed path end is not a movable vertex");
        }
    }
    if (!is_independent(g, j))
        raise(errc::result_not_independent, "interchange produced a dependent set");
    return j;
}

std::pair<int, VertexSet> non_alternating_path(const CubicGraph& g, const PathP& p, int in,
                                               const VertexSet& i) {
    int k = p.size();
    int n = g.n();
    if (in < 1 || in >= k) raise(errc::invalid_argument, "break position out of range");
    validate_subset(i, n, "independent set");
    int x = p.vertices[in - 1];
    int y = p.vertices[in];
    if (!g.adjacent(x, y)) raise(errc::invalid_argument, "break positions not adjacent");
    if (i.contains(x) || i.contains(y))
        raise(errc::invalid_argument, "break edge endpoint inside the set");
    if (in + 1 >= k || i.contains(p.vertices[in + 1]))
        raise(errc::invalid_argument, "no alternation break at the given position");

    std::vector<char> allowed = complement(i, n).mask(n);
    auto even = parity_path(g, allowed, x, y, 0, {x, y});
    if (!even) return {in, i};
    const std::vector<int>& cyc = *even;  // closing edge {x, y} completes the odd cycle

    int add = -1;
    for (int v : cyc)
        if (live_degree(g, i, v) == 3 && (add < 0 || v < add)) add = v;
    if (add >= 0) {
        VertexSet j = i;
        j.insert(add);
        return {k - 1, j};
    }

    std::vector<char> oncyc(n, 0);
    for (int v : cyc) oncyc[v] = 1;
    int t = -1;
    for (int q = k - 1; q >= 0; --q)
        if (oncyc[p.vertices[q]]) {
            t = q;
            break;
        }
    if (t <= in) raise(errc::step_failed, "cycle through the break edge stays behind the break");
    return {t, i};
}

namespace {

std::pair<VertexSet, SolveCase> break_cycle_impl(const CubicGraph& g, const VertexSet& i,
                                                 const OddCycleWitness& cycle) {
    int add = -1;
    for (int v : cycle.vertices)
        if (live_degree(g, i, v) == 3 && (add < 0 || v < add)) add = v;
    if (add >= 0) {
        VertexSet j = i;
        j.insert(add);
        return {j, SolveCase::deg3_absorb};
    }
    FreeClassification f = free_sets(g, i);
    if (f.empty())
        raise(errc::no_free_vertex, "no movable vertex though the remainder has an odd cycle");
    PathP p = find_path(g, i, cycle, f);
    VertexSet cur = i;
    int in = 0;
    for (int step = 0;; ++step) {
        if (step >= g.n())
            raise(errc::iteration_cap_exceeded, "alternating segments exceeded the vertex count");
        int out = alternating_path(p, in);
        cur = new_independent_set(g, p, in, out, cur, f);
        if (out == p.last()) return {cur, SolveCase::end_swap};
        if (p.surrounded[out]) return {cur, SolveCase::trigger_swap};
        auto [nxt, j2] = non_alternating_path(g, p, out, cur);
        if (j2.size() > cur.size()) return {j2, SolveCase::cycle_absorb};
        if (nxt == out) return {cur, SolveCase::harmless_break};
        in = nxt;
    }
}

}  // namespace

VertexSet break_cycle(const CubicGraph& g, const VertexSet& i, const OddCycleWitness& cycle) {
    validate_subset(i, g.n(), "independent set");
    if (!is_independent(g, i)) raise(errc::not_independent, "input set is not independent");
    check_cycle_in_rest(g, i, cycle);
    auto [j, kase] = break_cycle_impl(g, i, cycle);
    (void)kase;
    if (j.size() < i.size()) raise(errc::step_failed, "round shrank the set");
    if (!meets(j, cycle.vertices)) raise(errc::step_failed, "target cycle survived the round");
    return j;
}

std::pair<VertexSet, SolveTrace> bipartize(const CubicGraph& g, const VertexSet& i,
                                           const RoundObserver& observer) {
    int n = g.n();
    validate_subset(i, n, "independent set");
    if (!is_independent(g, i)) raise(errc::not_independent, "input set is not independent");
    if (10LL * i.size() < 4LL * n)
        raise(errc::threshold_not_met, "set smaller than two fifths of the graph");
    VertexSet cur = i;
    SolveTrace trace;
    long long cap = static_cast<long long>(n) * n;
    for (;;) {
        std::optional<OddCycleWitness> target = shortest_odd_cycle(g, complement(cur, n));
        if (!target) return {cur, trace};
        if (trace.rounds() >= cap)
            raise(errc::iteration_cap_exceeded, "round count exceeded the square of the order");
        auto [j, kase] = break_cycle_impl(g, cur, *target);
        if (j.size() < cur.size() || !meets(j, target->vertices))
            raise(errc::step_failed, "round failed to destroy its target");
        trace.iterations.push_back({*target, kase, cur.size(), j.size()});
        if (observer) observer(RoundView{cur, *target, j, kase});
        cur = std::move(j);
    }
}

namespace {

struct Built {
    VertexSet set;
    TriColoring coloring;
    SolveTrace trace;
};

// relabel so the chosen class becomes 0 and the other two follow by
// descending size (ties keep their original order)
TriColoring relabel_chosen(const TriColoring& col, int chosen) {
    auto sz = col.sizes();
    int o1 = -1, o2 = -1;
    for (int c = 0; c < 3; ++c) {
        if (c == chosen) continue;
        (o1 < 0 ? o1 : o2) = c;
    }
    if (sz[o2] > sz[o1]) std::swap(o1, o2);
    std::array<int, 3> map{};
    map[chosen] = 0;
    map[o1] = 1;
    map[o2] = 2;
    TriColoring out;
    out.assignment.resize(col.assignment.size());
    for (std::size_t v = 0; v < col.assignment.size(); ++v)
        out.assignment[v] = map[col.assignment[v]];
    return out;
}

// bipartize from a seed of the given size, then equalize until some class
// has exactly `target` vertices. The seed size is at least the threshold
// size and at least the target, so the shrinking largest class must pass
// through the target on its way to the balanced profile.
Built build_class_of_size(const CubicGraph& g, const VertexSet& witness, int start, int target,
                          const RoundObserver& observer) {
    VertexSet seed = shrink_to(witness, start);
    auto [j, trace] = bipartize(g, seed, observer);
    TriColoring col = semi_equitable(g, j);
    for (int guard = 0;; ++guard) {
        if (guard > g.n() + 3)
            raise(errc::iteration_cap_exceeded, "equalization failed to reach the target size");
        auto sz = col.sizes();
        for (int c = 0; c < 3; ++c)
            if (sz[c] == target) return {col.class_of(c), relabel_chosen(col, c), std::move(trace)};
        col = reduce_width(g, col);
    }
}

}  // namespace

Solution solve(const CubicGraph& g, int k, const RoundObserver& observer) {
    int n = g.n();
    if (classify(g) != GraphClass::Tripartite)
        raise(errc::not_tripartite, "solver requires chromatic number exactly 3");
    VertexSet witness;
    try {
        witness = max_is(g);
    } catch (const error& e) {
        if (e.code() != errc::budget_exceeded) throw;
        witness = greedy_mis(g, 0);
    }
    int alpha = witness.size();
    if (10LL * alpha < 4LL * n)
        raise(errc::threshold_not_met, "independence number below two fifths of the graph");
    int kmin = (n - alpha) / 2;
    if (k < kmin || k > alpha) raise(errc::k_out_of_range, "k outside the feasible range");

    int threshold_size = (4 * n + 9) / 10;
    int third = (n + 2) / 3;
    Solution sol;
    sol.alpha = alpha;
    if (k >= third) {
        Built b = build_class_of_size(g, witness, std::max(k, threshold_size), k, observer);
        sol.set = std::move(b.set);
        sol.coloring = std::move(b.coloring);
        sol.trace = std::move(b.trace);
    } else {
        // an oversized class of size m leaves 2k or 2k+1 vertices, whose
        // balanced bipartition contains a side of size exactly k
        bool done = false;
        for (int m : {n - 2 * k, n - 2 * k - 1}) {
            if (m > alpha || m < third) continue;
            Built b = build_class_of_size(g, witness, std::max(m, threshold_size), m, observer);
            Bipartition sides;
            try {
                sides = equitable_bipartition(g, complement(b.set, n));
            } catch (const error& e) {
                if (e.code() == errc::balance_infeasible) continue;
                throw;
            }
            bool a_is_k = sides.side_a.size() == k;
            const VertexSet& side = a_is_k ? sides.side_a : sides.side_b;
            const VertexSet& rest = a_is_k ? sides.side_b : sides.side_a;
            if (side.size() != k) continue;
            TriColoring col;
            col.assignment.assign(n, 2);
            for (int v : side.items()) col.assignment[v] = 0;
            for (int v : rest.items()) col.assignment[v] = 1;
            sol.set = side;
            sol.coloring = std::move(col);
            sol.trace = std::move(b.trace);
            done = true;
            break;
        }
        if (!done) raise(errc::balance_failed, "no oversized class admitted a balanced split");
    }

    if (sol.set.size() != k) raise(errc::step_failed, "result size mismatch");
    ColoringVerdict verdict = verify_coloring(g, sol.coloring);
    if (!verdict.ok() || !(sol.coloring.class_of(0) == sol.set))
        raise(errc::step_failed, "result coloring invalid");
    if (!std::holds_alternative<Bipartition>(bipartition_of(g, complement(sol.set, n))))
        raise(errc::step_failed, "remainder is not bipartite");
    return sol;
}

}  // namespace oddcut
