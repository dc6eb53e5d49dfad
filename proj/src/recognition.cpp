#include "tpe/recognition.hpp"

#include <sstream>

namespace tpe {

bool verify_obstruction(const Graph& g, const Obstruction& o) {
    const auto& v = o.vertices;
    for (int i = 0; i < 4; ++i) {
        if (v[i] < 0 || v[i] >= g.vertex_count()) return false;
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) return false;
    }
    bool e01 = g.is_edge(v[0], v[1]), e12 = g.is_edge(v[1], v[2]), e23 = g.is_edge(v[2], v[3]);
    bool e03 = g.is_edge(v[0], v[3]), e02 = g.is_edge(v[0], v[2]), e13 = g.is_edge(v[1], v[3]);
    if (!e01 || !e12 || !e23 || e02 || e13) return false;
    return o.kind == ObstructionKind::C4 ? e03 : !e03;
}

VertexSet universal_clique(const Graph& g) {
    VertexSet r;
    int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        if (g.degree(u) == n - 1) r.push_back(u);
    return r;
}

namespace {

// Finds an induced C4/P4 inside a connected graph without universal vertex.
// Take u of maximum degree; a BFS gives w at distance exactly 2 through v.
// Since deg(u) >= deg(v) and w is in N[v] \ N[u], some x in N[u] \ N[v]
// exists: x-u-v-w is a P4, or u-x-w-v a C4 when xw is an edge.
Obstruction extract_obstruction(const Graph& g, const VertexSet& comp) {
    Vertex u = comp[0];
    for (Vertex c : comp)
        if (g.degree(c) > g.degree(u)) u = c;

    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> parent(g.vertex_count(), -1), queue;
    dist[u] = 0;
    queue.push_back(u);
    Vertex w = -1;
    for (size_t qi = 0; qi < queue.size() && w < 0; ++qi) {
        Vertex a = queue[qi];
        for (Vertex b : g.neighbors(a)) {
            if (dist[b] >= 0) continue;
            dist[b] = dist[a] + 1;
            parent[b] = a;
            if (dist[b] == 2) {
                w = b;
                break;
            }
            queue.push_back(b);
        }
    }
    if (w < 0) throw std::logic_error("no distance-2 vertex in unpeelable component");
    Vertex v = parent[w];

    Vertex x = -1;
    {
        VertexSet nv = g.closed_neighborhood(v);
        for (Vertex cand : g.neighbors(u)) {
            if (!vs_contains(nv, cand)) {
                x = cand;
                break;
            }
        }
    }
    if (x < 0) throw std::logic_error("max-degree vertex dominated by neighbor");

    Obstruction o;
    if (g.is_edge(x, w)) {
        o.kind = ObstructionKind::C4;
        o.vertices = {u, x, w, v};
    } else {
        o.kind = ObstructionKind::P4;
        o.vertices = {x, u, v, w};
    }
    return o;
}

// Shared recursion for find_obstruction and build_ucd. Peels the universal
// clique of each component; records a node when building a decomposition.
// Returns the first obstruction found, if any.
struct Peeler {
    const Graph& g;
    Ucd* ucd = nullptr;

    std::optional<Obstruction> run() {
        for (const VertexSet& comp : connected_components(g)) {
            auto o = peel(comp, -1);
            if (o) return o;
        }
        return std::nullopt;
    }

    std::optional<Obstruction> peel(const VertexSet& comp, int parent) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        VertexSet uc = universal_clique(sub.graph);
        if (uc.empty()) {
            Obstruction o = extract_obstruction(sub.graph, all_vertices(sub.graph));
            for (auto& v : o.vertices) v = sub.to_original[v];
            return o;
        }
        int node = -1;
        if (ucd) {
            node = static_cast<int>(ucd->nodes.size());
            ucd->nodes.emplace_back();
            ucd->nodes[node].parent = parent;
            for (Vertex v : uc) ucd->nodes[node].bag.push_back(sub.to_original[v]);
            if (parent < 0) ucd->roots.push_back(node);
            else ucd->nodes[parent].children.push_back(node);
        }
        VertexSet rest = vs_difference(all_vertices(sub.graph), uc);
        if (rest.empty()) return std::nullopt;
        InducedSubgraph inner = induced_subgraph(sub.graph, rest);
        for (const VertexSet& c : connected_components(inner.graph)) {
            VertexSet orig;
            orig.reserve(c.size());
            for (Vertex v : c) orig.push_back(sub.to_original[inner.to_original[v]]);
            auto o = peel(orig, node);
            if (o) return o;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<Obstruction> find_obstruction(const Graph& g) {
    Peeler p{g, nullptr};
    return p.run();
}

bool is_trivially_perfect(const Graph& g) { return !find_obstruction(g).has_value(); }

VertexSet Ucd::subtree_vertices(int t) const {
    VertexSet out;
    std::vector<int> stack{t};
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        out.insert(out.end(), nodes[s].bag.begin(), nodes[s].bag.end());
        for (int c : nodes[s].children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Ucd build_ucd(const Graph& g) {
    Ucd d;
    Peeler p{g, &d};
    auto o = p.run();
    if (o) throw NotTriviallyPerfect(*o);
    return d;
}

bool validate_ucd(const Graph& g, const Ucd& d) {
    int n = g.vertex_count();
    int t = static_cast<int>(d.nodes.size());

    // Forest shape: parent/child links match, roots listed exactly once.
    std::vector<int> seen_as_child(t, 0);
    for (int i = 0; i < t; ++i) {
        int par = d.nodes[i].parent;
        if (par < -1 || par >= t || par == i) return false;
        for (int c : d.nodes[i].children) {
            if (c < 0 || c >= t || d.nodes[c].parent != i) return false;
            seen_as_child[c] += 1;
        }
    }
    {
        std::vector<int> root_seen(t, 0);
        for (int r : d.roots) {
            if (r < 0 || r >= t || d.nodes[r].parent != -1) return false;
            root_seen[r] += 1;
        }
        for (int i = 0; i < t; ++i) {
            int expected = d.nodes[i].parent == -1 ? 0 : 1;
            if (seen_as_child[i] != expected) return false;
            if ((d.nodes[i].parent == -1) != (root_seen[i] == 1)) return false;
        }
    }
    // Acyclic: walking parents from every node must terminate.
    for (int i = 0; i < t; ++i) {
        int steps = 0;
        for (int a = i; a != -1; a = d.nodes[a].parent)
            if (++steps > t) return false;
    }

    // Bags are nonempty and partition V.
    std::vector<int> node_of(n, -1);
    for (int i = 0; i < t; ++i) {
        if (d.nodes[i].bag.empty()) return false;
        for (Vertex v : d.nodes[i].bag) {
            if (v < 0 || v >= n || node_of[v] != -1) return false;
            node_of[v] = i;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (node_of[v] == -1) return false;

    // Condition 1: both endpoints of every edge lie on one root-to-leaf path,
    // i.e. their nodes are equal or in ancestor-descendant relation.
    auto is_ancestor = [&](int a, int b) {
        for (int x = b; x != -1; x = d.nodes[x].parent)
            if (x == a) return true;
        return false;
    };
    for (const auto& e : g.edges()) {
        int a = node_of[e.u], b = node_of[e.v];
        if (a != b && !is_ancestor(a, b) && !is_ancestor(b, a)) return false;
    }

    // Condition 2: each bag equals the universal clique of its subtree graph.
    for (int i = 0; i < t; ++i) {
        InducedSubgraph sub = induced_subgraph(g, d.subtree_vertices(i));
        VertexSet uc = universal_clique(sub.graph);
        for (auto& v : uc) v = sub.to_original[v];
        if (uc != d.nodes[i].bag) return false;
    }
    return true;
}

bool check_nested_family(const std::vector<VertexSet>& sets) {
    std::vector<const VertexSet*> order;
    order.reserve(sets.size());
    for (const auto& s : sets) order.push_back(&s);
    std::stable_sort(order.begin(), order.end(),
                     [](const VertexSet* a, const VertexSet* b) { return a->size() < b->size(); });
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (!vs_is_subset(*order[i], *order[i + 1])) return false;
    return true;
}

bool tp_characterization_check(const Graph& g, const VertexSet& s) {
    if (s.empty() && g.vertex_count() > 0) throw InvalidInput("clique must be nonempty");
    if (!g.is_clique(s)) throw InvalidInput("set is not a clique");
    {
        std::vector<char> in(g.vertex_count(), 0);
        for (Vertex v : s) in[v] = 1;
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            if (in[u]) continue;
            bool dominates = true;
            for (Vertex v : s)
                if (!g.is_edge(u, v)) {
                    dominates = false;
                    break;
                }
            if (dominates) throw InvalidInput("clique is not maximal");
        }
    }

    VertexSet rest = vs_difference(all_vertices(g), s);
    InducedSubgraph outer = induced_subgraph(g, rest);
    std::vector<VertexSet> neighborhoods;
    for (const VertexSet& c : connected_components(outer.graph)) {
        VertexSet comp;
        comp.reserve(c.size());
        for (Vertex v : c) comp.push_back(outer.to_original[v]);

        InducedSubgraph with_s = induced_subgraph(g, vs_union(comp, s));
        if (!is_trivially_perfect(with_s.graph)) return false;

        VertexSet nb = neighborhood_of_set(g, comp);
        for (Vertex u : comp)
            for (Vertex v : nb)
                if (!g.is_edge(u, v)) return false;
        neighborhoods.push_back(std::move(nb));
    }
    return check_nested_family(neighborhoods);
}

std::string ucd_to_string(const Ucd& d) {
    std::ostringstream ss;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        ss << i << " " << d.nodes[i].parent << " :";
        for (Vertex v : d.nodes[i].bag) ss << " " << v;
        ss << "\n";
    }
    return ss.str();
}

} // namespace tpe
