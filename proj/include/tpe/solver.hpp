#pragma once

#include "tpe/kernel.hpp"

namespace tpe {

struct SolveResult {
    bool yes = false;
    // Valid only when yes: applying these toggles to the input graph makes it
    // trivially perfect, |witness| <= k, and every pair respects the mode.
    EditSet witness;
    // Search-tree nodes that actually branched (obstruction found, budget left).
    long long nodes_expanded = 0;
};

// Bounded search tree: extract an obstruction, branch on each of its six
// vertex pairs the mode may toggle, decrement the budget. On any root-to-leaf
// branch a pair is toggled at most once, so at most 6^k nodes expand.
SolveResult solve(const Instance& inst);

// Exhaustive oracle: tries every mode-allowed edit set of size <= k in
// size-then-lexicographic order. Exponential in n; test use only.
SolveResult solve_bruteforce(const Instance& inst);

// Substitutes h for the vertex u: g - u keeps its ids compacted downward,
// h's vertices are appended and made adjacent to all of N_g(u).
Graph blow_up(const Graph& g, Vertex u, const Graph& h);

} // namespace tpe
