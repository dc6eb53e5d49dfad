#pragma once

#include <optional>

#include "tpe/graph.hpp"

namespace tpe {

// Pairwise disjoint edges (for a matching) or non-adjacent pairs (for an
// anti-matching), sorted.
using Matching = std::vector<VertexPair>;

// Maximum-cardinality matching via repeated augmenting-path search with
// odd-cycle (blossom) contraction, after a greedy warm start. Deterministic:
// vertices are processed in increasing id order.
//
// With stop_at set, the search stops once the matching holds stop_at pairs;
// the result is then stop_at or more pairs, or a maximum matching.
Matching maximum_matching(const Graph& g, std::optional<int> stop_at = std::nullopt);

// Anti-matching of g[m]: a matching of the complement of g[m], translated
// back to original ids. Without stop_at the result is maximum (size alpha).
// With stop_at, a result smaller than stop_at certifies alpha < stop_at but
// may itself be only maximal, not maximum.
Matching max_anti_matching(const Graph& g, const VertexSet& m,
                           std::optional<int> stop_at = std::nullopt);

// Shortest prefix of the given ordered disjoint sets whose sizes sum to at
// least r, or nullopt when the whole list falls short.
struct Packing {
    std::vector<VertexSet> prefix;
    long long vertex_total = 0;
};

std::optional<Packing> build_packing(const std::vector<VertexSet>& sets, long long r);

} // namespace tpe
