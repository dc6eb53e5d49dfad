#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpe {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids. All functions below that
// produce vertex sets keep this invariant.
using VertexSet = std::vector<Vertex>;

// Unordered vertex pair, stored with u < v.
struct VertexPair {
    Vertex u = 0;
    Vertex v = 0;

    VertexPair() = default;
    VertexPair(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Set of vertex pairs, sorted and duplicate-free. Relative to a reference
// graph each pair is an addition (non-edge) or a deletion (edge).
using EditSet = std::vector<VertexPair>;

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction; use GraphBuilder or the free functions to
// derive new graphs.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<VertexPair>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool is_edge(Vertex u, Vertex v) const;
    int degree(Vertex u) const { return static_cast<int>(adj_[check(u)].size()); }
    const VertexSet& neighbors(Vertex u) const { return adj_[check(u)]; }

    // Closed neighborhood N[u], sorted.
    VertexSet closed_neighborhood(Vertex u) const;

    bool is_clique(const VertexSet& s) const;

    std::vector<VertexPair> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    Vertex check(Vertex u) const {
        if (u < 0 || u >= n_) throw InvalidInput("vertex id out of range: " + std::to_string(u));
        return u;
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> adj_;
};

// Incremental construction; the only place vertices can be added or removed.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    Vertex add_vertex();
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    Graph build() const;

private:
    std::vector<std::vector<Vertex>> adj_;
};

// ---- sorted-set helpers -------------------------------------------------

VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersection(const VertexSet& a, const VertexSet& b);
VertexSet vs_difference(const VertexSet& a, const VertexSet& b);
bool vs_contains(const VertexSet& s, Vertex v);
bool vs_is_subset(const VertexSet& a, const VertexSet& b);
bool vs_disjoint(const VertexSet& a, const VertexSet& b);
// Sorts and removes duplicates in place.
void vs_normalize(VertexSet& s);

// ---- graph operations ---------------------------------------------------

// Toggles every pair in f: edges are deleted, non-edges added.
// Applying the same set twice returns the original graph.
Graph apply_edits(const Graph& g, const EditSet& f);

struct InducedSubgraph {
    Graph graph;
    // new id -> original id, increasing
    std::vector<Vertex> to_original;
    // original id -> new id, -1 when not in the subgraph
    std::vector<Vertex> to_local;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Components sorted by smallest contained vertex id; vertices sorted within.
std::vector<VertexSet> connected_components(const Graph& g);

// Components of g[within]; same ordering. within must be sorted.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

// N(S) = all neighbors of S outside S.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// All vertices 0..n-1.
VertexSet all_vertices(const Graph& g);

} // namespace tpe
