#pragma once

#include "tpe/graph.hpp"

namespace tpe {

// Partition of V into maximal sets of true twins (equal closed
// neighborhoods). Classes are ordered by smallest member.
struct CriticalCliquePartition {
    std::vector<VertexSet> classes;
    std::vector<int> class_of; // vertex -> class index
};

CriticalCliquePartition critical_cliques(const Graph& g);

// True iff all members of m have the same neighborhood outside m.
bool is_module(const Graph& g, const VertexSet& m);

// One node of the modular decomposition tree. kind describes how the
// children partition the node: components (parallel), join of co-components
// (series), or a prime quotient.
enum class ModuleKind { leaf, parallel, series, prime };

struct ModuleNode {
    VertexSet members;
    int parent = -1;
    ModuleKind kind = ModuleKind::leaf;
};

// All strong modules of g, as the nodes of the modular decomposition tree
// (root V first). Includes V and all singletons.
struct ModuleList {
    std::vector<ModuleNode> nodes;
};

ModuleList strong_modules(const Graph& g);

// Strong modules M != V with g[M] trivially perfect, in decreasing size
// (ties by smallest member).
std::vector<VertexSet> trivially_perfect_modules(const Graph& g);

} // namespace tpe
