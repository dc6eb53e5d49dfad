#include "tpe/decomposition.hpp"

#include <map>

#include "tpe/recognition.hpp"

namespace tpe {

CriticalCliquePartition critical_cliques(const Graph& g) {
    int n = g.vertex_count();
    CriticalCliquePartition p;
    p.class_of.assign(n, -1);

    // Group by hash of N[v], verify within buckets. True twins are adjacent
    // and share all other neighbors, so equal closed neighborhoods.
    std::map<unsigned long long, std::vector<Vertex>> buckets;
    std::vector<VertexSet> closed(n);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = g.closed_neighborhood(v);
        unsigned long long h = 1469598103934665603ull;
        for (Vertex w : closed[v]) {
            h ^= static_cast<unsigned long long>(w) + 1;
            h *= 1099511628211ull;
        }
        buckets[h].push_back(v);
    }
    for (auto& [h, members] : buckets) {
        for (Vertex v : members) {
            if (p.class_of[v] != -1) continue;
            int id = static_cast<int>(p.classes.size());
            p.classes.emplace_back();
            for (Vertex w : members) {
                if (p.class_of[w] == -1 && closed[w] == closed[v]) {
                    p.class_of[w] = id;
                    p.classes[id].push_back(w);
                }
            }
        }
    }
    // Reorder classes by smallest member for a canonical result.
    std::vector<int> order(p.classes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.classes[a][0] < p.classes[b][0]; });
    std::vector<VertexSet> sorted;
    sorted.reserve(p.classes.size());
    std::vector<int> new_id(p.classes.size());
    for (size_t i = 0; i < order.size(); ++i) {
        new_id[order[i]] = static_cast<int>(i);
        sorted.push_back(std::move(p.classes[order[i]]));
    }
    p.classes = std::move(sorted);
    for (Vertex v = 0; v < n; ++v) p.class_of[v] = new_id[p.class_of[v]];
    return p;
}

bool is_module(const Graph& g, const VertexSet& m) {
    if (m.empty()) throw InvalidInput("module must be nonempty");
    for (Vertex v : m)
        if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
    VertexSet ref = vs_difference(g.neighbors(m[0]), m);
    for (size_t i = 1; i < m.size(); ++i)
        if (vs_difference(g.neighbors(m[i]), m) != ref) return false;
    return true;
}

namespace {

// Connected components of the complement of g[w], without materializing the
// complement: BFS over the pool of unvisited vertices.
std::vector<std::vector<int>> co_components(const Graph& g, const std::vector<int>& w) {
    std::vector<int> pool = w; // unvisited
    std::vector<std::vector<int>> out;
    std::vector<int> queue;
    while (!pool.empty()) {
        out.emplace_back();
        queue.assign(1, pool.front());
        pool.erase(pool.begin());
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            out.back().push_back(u);
            // Move all pool vertices NOT adjacent to u into the queue.
            std::vector<int> keep;
            const VertexSet& nb = g.neighbors(u);
            for (int x : pool) {
                if (std::binary_search(nb.begin(), nb.end(), x)) keep.push_back(x);
                else queue.push_back(x);
            }
            pool.swap(keep);
        }
        std::sort(out.back().begin(), out.back().end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Smallest module of g[w] containing seed; grows by absorbing any outside
// vertex adjacent to part of the current set but not all of it.
std::vector<int> minimal_module(const Graph& g, const std::vector<int>& w,
                                const std::vector<int>& seed) {
    std::vector<char> in_module(g.vertex_count(), 0);
    // adj_count[x] = number of current members adjacent to x
    std::vector<int> adj_count(g.vertex_count(), 0);
    std::vector<int> members;
    auto absorb = [&](int v) {
        in_module[v] = 1;
        members.push_back(v);
        for (int x : g.neighbors(v)) adj_count[x] += 1;
    };
    for (int v : seed) absorb(v);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x : w) {
            if (in_module[x]) continue;
            int cnt = adj_count[x];
            if (cnt > 0 && cnt < static_cast<int>(members.size())) {
                absorb(x);
                grew = true;
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

struct TreeBuilder {
    const Graph& g;
    ModuleList out;

    // Builds the subtree for vertex set w (sorted); returns its node index.
    int decompose(const std::vector<int>& w, int parent) {
        int id = static_cast<int>(out.nodes.size());
        out.nodes.emplace_back();
        out.nodes[id].members = w;
        out.nodes[id].parent = parent;
        if (w.size() == 1) {
            out.nodes[id].kind = ModuleKind::leaf;
            return id;
        }
        auto comps = connected_components(g, w);
        if (comps.size() > 1) {
            out.nodes[id].kind = ModuleKind::parallel;
            for (const auto& c : comps) child(c, id);
            return id;
        }
        auto cocomps = co_components(g, w);
        if (cocomps.size() > 1) {
            out.nodes[id].kind = ModuleKind::series;
            for (const auto& c : cocomps) child(c, id);
            return id;
        }
        out.nodes[id].kind = ModuleKind::prime;
        for (const auto& c : prime_children(w)) child(c, id);
        return id;
    }

    void child(const std::vector<int>& c, int parent) {
        if (c.size() == 1) {
            int id = static_cast<int>(out.nodes.size());
            out.nodes.emplace_back();
            out.nodes[id].members = c;
            out.nodes[id].parent = parent;
        } else {
            decompose(c, parent);
        }
    }

    // Children of a prime node: classes of "some module smaller than w
    // contains both". Each minimal module found lands inside one child.
    std::vector<std::vector<int>> prime_children(const std::vector<int>& w) {
        std::vector<char> assigned(g.vertex_count(), 0);
        std::vector<std::vector<int>> children;
        for (size_t i = 0; i < w.size(); ++i) {
            int u = w[i];
            if (assigned[u]) continue;
            std::vector<int> cls{u};
            assigned[u] = 1;
            for (size_t j = i + 1; j < w.size(); ++j) {
                int v = w[j];
                if (assigned[v]) continue;
                auto m = minimal_module(g, w, {u, v});
                if (m.size() < w.size()) {
                    for (int x : m)
                        if (!assigned[x]) {
                            assigned[x] = 1;
                            cls.push_back(x);
                        }
                }
            }
            std::sort(cls.begin(), cls.end());
            children.push_back(std::move(cls));
        }
        std::sort(children.begin(), children.end());
        return children;
    }
};

} // namespace

ModuleList strong_modules(const Graph& g) {
    ModuleList out;
    if (g.vertex_count() == 0) return out;

    // Work on the quotient by critical cliques: classes of true twins
    // collapse to single vertices, which keeps prime nodes small. A class of
    // size >= 2 expands back to a series node over its singletons, merged
    // into the parent when the parent is itself a series node.
    CriticalCliquePartition cc = critical_cliques(g);
    int q = static_cast<int>(cc.classes.size());
    GraphBuilder qb(q);
    for (int a = 0; a < q; ++a) {
        Vertex rep = cc.classes[a][0];
        for (Vertex wv : g.neighbors(rep)) {
            int b = cc.class_of[wv];
            if (a < b && !qb.has_edge(a, b)) qb.add_edge(a, b);
        }
    }
    Graph quotient = qb.build();

    TreeBuilder tb{quotient, {}};
    tb.decompose(all_vertices(quotient), -1);

    // Expand quotient-tree nodes back to vertex sets of g.
    for (const ModuleNode& qn : tb.out.nodes) {
        ModuleNode n;
        n.parent = qn.parent; // fixed up below
        n.kind = qn.kind;
        for (int cls : qn.members)
            n.members.insert(n.members.end(), cc.classes[cls].begin(), cc.classes[cls].end());
        vs_normalize(n.members);
        out.nodes.push_back(std::move(n));
    }
    // Quotient leaves holding a class of size >= 2 become series nodes over
    // singleton leaves, except under a series parent where the singletons
    // attach directly (the class is then not a strong module).
    int base = static_cast<int>(out.nodes.size());
    std::vector<ModuleNode> extra;
    for (int i = 0; i < base; ++i) {
        if (tb.out.nodes[i].kind != ModuleKind::leaf) continue;
        const VertexSet& members = out.nodes[i].members;
        if (members.size() == 1) continue;
        int parent = out.nodes[i].parent;
        bool merge = parent >= 0 && out.nodes[parent].kind == ModuleKind::series;
        int attach = merge ? parent : i;
        if (!merge) out.nodes[i].kind = ModuleKind::series;
        for (Vertex v : members) {
            ModuleNode leafn;
            leafn.members = {v};
            leafn.parent = attach;
            leafn.kind = ModuleKind::leaf;
            extra.push_back(std::move(leafn));
        }
        if (merge) {
            // The class node dissolves; reparent by marking it a leaf of its
            // parent is wrong, so splice it out entirely below.
            out.nodes[i].kind = ModuleKind::leaf; // placeholder, removed next
            out.nodes[i].members.clear();
        }
    }
    for (auto& e : extra) out.nodes.push_back(std::move(e));

    // Drop dissolved placeholder nodes, remapping parents.
    std::vector<int> remap(out.nodes.size(), -1);
    ModuleList final_list;
    for (size_t i = 0; i < out.nodes.size(); ++i) {
        if (out.nodes[i].members.empty()) continue;
        remap[i] = static_cast<int>(final_list.nodes.size());
        final_list.nodes.push_back(std::move(out.nodes[i]));
    }
    for (auto& n : final_list.nodes)
        if (n.parent >= 0) n.parent = remap[n.parent];
    return final_list;
}

std::vector<VertexSet> trivially_perfect_modules(const Graph& g) {
    ModuleList ml = strong_modules(g);
    std::vector<VertexSet> out;
    for (const auto& n : ml.nodes) {
        if (static_cast<int>(n.members.size()) == g.vertex_count()) continue;
        InducedSubgraph sub = induced_subgraph(g, n.members);
        if (is_trivially_perfect(sub.graph)) out.push_back(n.members);
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

} // namespace tpe
