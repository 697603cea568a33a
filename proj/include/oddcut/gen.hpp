#pragma once

#include <cstdint>
#include <string>

#include "oddcut/graph.hpp"

namespace oddcut {

struct GenSpec {
    int n = 0;                  // even, >= 4 (n = 4 always exhausts: K4 is rejected)
    std::uint64_t seed = 0;
    int max_attempts = 10000;
};

// Pairing-model sample of a connected tripartite cubic graph: 3 labeled
// half-edges per vertex are matched uniformly (seeded shuffle, adjacent
// pairing); attempts with loops, parallel edges, a disconnected result, or a
// non-Tripartite classification are rejected and retried on the same RNG
// stream, so the output is fully reproducible from (n, seed).
CubicGraph random_cubic(const GenSpec& spec);

// canonical labeled constructions:
// petersen, k4, k33, prism, moebius_kantor, twin_diamond
CubicGraph named(const std::string& name);

}  // namespace oddcut
