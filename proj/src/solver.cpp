#include "tpe/solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "tpe/recognition.hpp"

namespace tpe {

namespace {

bool mode_allows(EditMode mode, bool edge_present) {
    if (mode == EditMode::deletion) return edge_present;
    if (mode == EditMode::completion) return !edge_present;
    return true;
}

struct Searcher {
    EditMode mode;
    long long nodes = 0;

    // used holds the pairs toggled on the current branch; on success it is
    // the witness (each pair toggled once, so order of application is moot).
    bool run(const Graph& g, int budget, std::vector<VertexPair>& used,
             EditSet& out) {
        std::optional<Obstruction> obs = find_obstruction(g);
        if (!obs) {
            out.assign(used.begin(), used.end());
            std::sort(out.begin(), out.end());
            return true;
        }
        if (budget == 0) return false;
        nodes += 1;
        const auto& vs = obs->vertices;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                VertexPair p{vs[i], vs[j]};
                if (!mode_allows(mode, g.is_edge(p.u, p.v))) continue;
                if (std::find(used.begin(), used.end(), p) != used.end()) continue;
                used.push_back(p);
                if (run(apply_edits(g, {p}), budget - 1, used, out)) return true;
                used.pop_back();
            }
        }
        return false;
    }
};

} // namespace

SolveResult solve(const Instance& inst) {
    Searcher s{inst.mode};
    SolveResult res;
    std::vector<VertexPair> used;
    res.yes = s.run(inst.graph, std::max(inst.k, 0), used, res.witness);
    if (!res.yes) res.witness.clear();
    res.nodes_expanded = s.nodes;
    return res;
}

SolveResult solve_bruteforce(const Instance& inst) {
    const Graph& g = inst.graph;
    std::vector<VertexPair> pool;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (mode_allows(inst.mode, g.is_edge(u, v))) pool.push_back({u, v});

    SolveResult res;
    int limit = std::min<int>(std::max(inst.k, 0), static_cast<int>(pool.size()));
    for (int size = 0; size <= limit; ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            EditSet edits;
            edits.reserve(size);
            for (int i : idx) edits.push_back(pool[i]);
            if (is_trivially_perfect(apply_edits(g, edits))) {
                res.yes = true;
                res.witness = std::move(edits);
                return res;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - size + i) --i;
            if (i < 0) break;
            idx[i] += 1;
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return res;
}

Graph blow_up(const Graph& g, Vertex u, const Graph& h) {
    if (u < 0 || u >= g.vertex_count())
        throw InvalidInput("blow_up: vertex not in graph");
    int base = g.vertex_count() - 1;
    auto keep = [u](Vertex v) { return v < u ? v : v - 1; };
    GraphBuilder b(base + h.vertex_count());
    for (const VertexPair& e : g.edges())
        if (e.u != u && e.v != u) b.add_edge(keep(e.u), keep(e.v));
    for (const VertexPair& e : h.edges())
        b.add_edge(base + e.u, base + e.v);
    for (Vertex w : g.neighbors(u))
        for (Vertex x = 0; x < h.vertex_count(); ++x)
            b.add_edge(keep(w), base + x);
    return b.build();
}

} // namespace tpe
