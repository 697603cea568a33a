#pragma once

// Hand-built graphs shared across test suites. Adjacency is written out
// explicitly so tests never depend on the generator module they exercise.

#include <utility>
#include <vector>

#include "oddcut/graph.hpp"

namespace fixtures {

using oddcut::CubicGraph;

using EdgeList = std::vector<std::pair<int, int>>;

inline CubicGraph k4() {
    return CubicGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// triangles 0-1-2 and 3-4-5, rungs i - i+3
inline CubicGraph prism() {
    return CubicGraph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// sides {0,1,2} and {3,4,5}
inline CubicGraph k33() {
    EdgeList es;
    for (int a : {0, 1, 2})
        for (int b : {3, 4, 5}) es.emplace_back(a, b);
    return CubicGraph::from_edges(6, es);
}

// outer cycle 0..4, spokes i - i+5, inner pentagram
inline CubicGraph petersen() {
    return CubicGraph::from_edges(10, {{0, 1},
                                       {1, 2},
                                       {2, 3},
                                       {3, 4},
                                       {0, 4},
                                       {0, 5},
                                       {1, 6},
                                       {2, 7},
                                       {3, 8},
                                       {4, 9},
                                       {5, 7},
                                       {7, 9},
                                       {6, 9},
                                       {6, 8},
                                       {5, 8}});
}

// generalized Petersen GP(8,3): bipartite, girth 6
inline CubicGraph moebius_kantor() {
    EdgeList es;
    for (int i = 0; i < 8; ++i) {
        es.emplace_back(i, (i + 1) % 8);
        es.emplace_back(i, 8 + i);
        es.emplace_back(8 + i, 8 + (i + 3) % 8);
    }
    return CubicGraph::from_edges(16, es);
}

// two diamonds {0,1,2,3} (missing edge 0-1) and {4,5,6,7} (missing 4-5),
// joined by 0-4 and 1-5
inline CubicGraph twin_diamond() {
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

// n = 20 with independent set {0..7} hitting the size threshold exactly:
// G - {0..7} is two triangles (8-9-10, 11-12-13) plus six isolated vertices,
// and 0 is the only non-free member (its neighbors 9, 10 are adjacent).
inline CubicGraph res_two_triangles() {
    return CubicGraph::from_edges(
        20, {{0, 9},  {0, 10}, {0, 14}, {1, 8},  {1, 14}, {1, 15}, {2, 11}, {2, 15},
             {2, 16}, {3, 12}, {3, 16}, {3, 17}, {4, 13}, {4, 17}, {4, 18}, {5, 14},
             {5, 18}, {5, 19}, {6, 15}, {6, 16}, {6, 19}, {7, 17}, {7, 18}, {7, 19},
             {8, 9},  {8, 10}, {9, 10}, {11, 12}, {11, 13}, {12, 13}});
}

inline oddcut::VertexSet res_two_triangles_set() { return oddcut::VertexSet{0, 1, 2, 3, 4, 5, 6, 7}; }

// two diamonds {0,1,2,3} and {5,6,7,8} whose tips 0,1 resp. 5,6 stay
// mutually non-adjacent because each pair funnels into a shared apex (4
// resp. 9); with I = {0,1,5,6} both diamonds are of the first kind
inline CubicGraph twin_type1() {
    return CubicGraph::from_edges(10, {{0, 2},
                                       {0, 3},
                                       {0, 4},
                                       {1, 2},
                                       {1, 3},
                                       {1, 4},
                                       {2, 3},
                                       {4, 9},
                                       {5, 7},
                                       {5, 8},
                                       {5, 9},
                                       {6, 7},
                                       {6, 8},
                                       {6, 9},
                                       {7, 8}});
}

// one diamond {0,1,2,3} plus the 5-cycle 0-2-1-4-5-0 whose off-diamond pair
// 4, 5 shares the neighbor 6; with I = {0,1,6} the diamond is of the second
// kind with witness (c,d,x) = (4,5,6)
inline CubicGraph one_diamond_type2() {
    return CubicGraph::from_edges(12, {{0, 2},
                                       {0, 3},
                                       {0, 5},
                                       {1, 2},
                                       {1, 3},
                                       {1, 4},
                                       {2, 3},
                                       {4, 5},
                                       {4, 6},
                                       {5, 6},
                                       {6, 7},
                                       {7, 8},
                                       {7, 9},
                                       {8, 10},
                                       {8, 11},
                                       {9, 10},
                                       {9, 11},
                                       {10, 11}});
}

// res_two_triangles with the triangle edges rewired into one even cycle
// 8-9-10-11-12-13: same independent set {0..7} at the exact size threshold,
// but G - {0..7} is bipartite (a 6-cycle plus six isolated vertices)
inline CubicGraph threshold_even() {
    return CubicGraph::from_edges(
        20, {{0, 9},  {0, 10}, {0, 14}, {1, 8},  {1, 14},  {1, 15},  {2, 11},  {2, 15},
             {2, 16}, {3, 12}, {3, 16}, {3, 17}, {4, 13},  {4, 17},  {4, 18},  {5, 14},
             {5, 18}, {5, 19}, {6, 15}, {6, 16}, {6, 19},  {7, 17},  {7, 18},  {7, 19},
             {8, 9},  {9, 10}, {10, 11}, {11, 12}, {12, 13}, {8, 13}});
}

// bipartite cubic graph whose vertex set {4..11} induces two stars
// 4-{5,6,7} and 8-{9,10,11}; exercises orientation flipping in balanced
// 2-coloring (side shapes (1,3) and (3,1))
inline CubicGraph two_stars() {
    return CubicGraph::from_edges(12, {{0, 5},
                                       {0, 6},
                                       {0, 7},
                                       {1, 5},
                                       {1, 9},
                                       {1, 10},
                                       {2, 6},
                                       {2, 9},
                                       {2, 11},
                                       {3, 7},
                                       {3, 10},
                                       {3, 11},
                                       {4, 5},
                                       {4, 6},
                                       {4, 7},
                                       {8, 9},
                                       {8, 10},
                                       {8, 11}});
}

// disconnected: two copies of K4
inline CubicGraph two_k4() {
    EdgeList es;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) es.emplace_back(base + i, base + j);
    return CubicGraph::from_edges(8, es);
}

// n = 16 with I = {0,1,6,10,11}: the residuum is the triangle 7-8-9, the only
// classified structure is the second-kind diamond on tips 0,1 (interior 2,3,
// witness c=4, d=5, x=6), and the cycle-to-F search walks 7-6-5-0 ending on
// tip 0, so breaking the cycle exercises the diamond end fixup
inline CubicGraph diamond_tail() {
    return CubicGraph::from_edges(16, {{0, 2},   {0, 3},   {0, 5},   {1, 2},   {1, 3},   {1, 4},
                                       {2, 3},   {4, 5},   {4, 6},   {5, 6},   {6, 7},   {7, 8},
                                       {7, 9},   {8, 9},   {8, 10},  {9, 11},  {10, 12}, {10, 13},
                                       {11, 14}, {11, 15}, {12, 13}, {12, 14}, {13, 15}, {14, 15}});
}

inline oddcut::VertexSet diamond_tail_set() { return oddcut::VertexSet{0, 1, 6, 10, 11}; }

// n = 30 with I = {3,4,5,6,7,8,9,10,24,25,26,27}: the residuum is the
// triangle 0-1-2, vertex 8 is the only genuinely free member, and the other
// classified structures are two first-kind diamonds (tips 26,27 and 4,7) and
// two second-kind diamonds (tips 24,25 and 9,10) placed farther from the
// triangle than 8, so the search path 0-3-11-8 passes a trigger at 11 (both
// neighbors 6 and 8 in I)
inline CubicGraph trigger_web() {
    return CubicGraph::from_edges(
        30, {{0, 1},   {0, 2},   {1, 2},   {0, 3},   {1, 3},   {2, 5},   {3, 11},  {6, 11},
             {8, 11},  {6, 12},  {6, 13},  {12, 13}, {8, 18},  {8, 19},  {5, 20},  {5, 21},
             {20, 21}, {4, 22},  {4, 23},  {22, 23}, {7, 22},  {7, 23},  {9, 28},  {9, 29},
             {28, 29}, {10, 28}, {10, 29}, {24, 14}, {24, 15}, {14, 15}, {25, 14}, {25, 15},
             {26, 16}, {26, 17}, {16, 17}, {27, 16}, {27, 17}, {4, 18},  {26, 18}, {7, 19},
             {27, 19}, {9, 20},  {10, 21}, {24, 12}, {25, 13}});
}

inline oddcut::VertexSet trigger_web_set() {
    return oddcut::VertexSet{3, 4, 5, 6, 7, 8, 9, 10, 24, 25, 26, 27};
}

// host graph for synthetic interchange paths along 0-1-2-3-4-5-6: vertex 7
// has all three neighbors outside {0,2,6,11,12,13}, the edge 4-5 joins two
// outside vertices, and the 16-17 pair closes odd cycles through 5-6 or 11
inline CubicGraph break_chain() {
    return CubicGraph::from_edges(18, {{0, 1},   {0, 14},  {0, 15},  {1, 2},   {1, 14},  {2, 3},
                                       {2, 15},  {3, 4},   {3, 10},  {4, 5},   {4, 11},  {5, 6},
                                       {5, 7},   {6, 16},  {6, 17},  {7, 8},   {7, 12},  {8, 9},
                                       {8, 12},  {9, 10},  {9, 12},  {10, 13}, {11, 16}, {11, 17},
                                       {13, 14}, {13, 15}, {16, 17}});
}

}  // namespace fixtures
