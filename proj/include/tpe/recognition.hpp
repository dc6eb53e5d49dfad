#pragma once

#include <array>
#include <optional>

#include "tpe/graph.hpp"

namespace tpe {

// Induced obstruction witnessing that a graph is not trivially perfect.
// C4: vertices in cycle order, edges 01 12 23 30, non-edges 02 13.
// P4: vertices in path order, edges 01 12 23, non-edges 02 13 03.
enum class ObstructionKind { C4, P4 };

struct Obstruction {
    ObstructionKind kind = ObstructionKind::P4;
    std::array<Vertex, 4> vertices{};
};

// Checks that o really is an induced C4/P4 of g in the order stated above.
bool verify_obstruction(const Graph& g, const Obstruction& o);

// Universal clique {u : N[u] = V}. Empty unless g is connected (or n <= 1).
VertexSet universal_clique(const Graph& g);

// Returns an induced C4 or P4, or nullopt when g is trivially perfect.
// Runs the universal-clique peeling; a component that cannot be peeled
// yields the witness directly.
std::optional<Obstruction> find_obstruction(const Graph& g);

bool is_trivially_perfect(const Graph& g);

// Universal clique decomposition: a rooted forest whose bags partition V.
// Every edge joins vertices on a common root-to-leaf path and each bag is
// the universal clique of the subgraph induced by its subtree's bags.
struct UcdNode {
    int parent = -1;
    std::vector<int> children;
    VertexSet bag;
};

struct Ucd {
    std::vector<UcdNode> nodes;
    std::vector<int> roots;

    // All vertices in bags of the subtree rooted at t, sorted.
    VertexSet subtree_vertices(int t) const;
};

struct NotTriviallyPerfect : std::runtime_error {
    explicit NotTriviallyPerfect(const Obstruction& o)
        : std::runtime_error("graph is not trivially perfect"), obstruction(o) {}
    Obstruction obstruction;
};

// Throws NotTriviallyPerfect when g has an obstruction.
// Deterministic: roots and children are ordered by smallest contained vertex.
Ucd build_ucd(const Graph& g);

// Literal check of both decomposition conditions plus bag partition/forest
// shape. True only for valid decompositions of g.
bool validate_ucd(const Graph& g, const Ucd& d);

// True iff the sets are pairwise nested (for any two, one contains the other).
bool check_nested_family(const std::vector<VertexSet>& sets);

// Characterization via a maximal clique s: g is trivially perfect iff for the
// components K_1..K_r of g - s, every g[s union K_i] is trivially perfect,
// the neighborhoods N(K_i) form a nested family, and every K_i is fully
// adjacent to N(K_i). Throws InvalidInput when s is not a maximal clique.
bool tp_characterization_check(const Graph& g, const VertexSet& s);

std::string ucd_to_string(const Ucd& d);

} // namespace tpe
