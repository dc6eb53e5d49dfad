#include "tpe/matching.hpp"

namespace tpe {

namespace {

// Classic augmenting-path search with blossom contraction. base[] maps each
// vertex to the base of its contracted blossom; p[] stores the alternating
// tree, entered only at even (outer) vertices.
struct BlossomSearch {
    const Graph& g;
    int n;
    std::vector<int> match, p, base;
    std::vector<char> used, in_blossom;

    explicit BlossomSearch(const Graph& graph)
        : g(graph), n(graph.vertex_count()), match(n, -1), p(n, -1), base(n),
          used(n, 0), in_blossom(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> mark(n, 0);
        for (;;) {
            a = base[a];
            mark[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    bool find_path(int root, std::vector<int>& queue) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        queue.assign(1, root);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    // Odd cycle: contract the blossom at the lca.
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) {
                        for (int u = to; u != -1;) {
                            int pv = p[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return false;
    }
};

} // namespace

Matching maximum_matching(const Graph& g, std::optional<int> stop_at) {
    BlossomSearch bs(g);
    int size = 0;

    // Greedy warm start: pair each free vertex with its first free neighbor.
    for (int u = 0; u < bs.n; ++u) {
        if (bs.match[u] != -1) continue;
        for (int v : g.neighbors(u)) {
            if (bs.match[v] == -1) {
                bs.match[u] = v;
                bs.match[v] = u;
                ++size;
                break;
            }
        }
    }

    std::vector<int> queue;
    for (int v = 0; v < bs.n; ++v) {
        if (stop_at && size >= *stop_at) break;
        if (bs.match[v] == -1 && bs.find_path(v, queue)) ++size;
    }

    Matching out;
    out.reserve(size);
    for (int v = 0; v < bs.n; ++v)
        if (bs.match[v] > v) out.emplace_back(v, bs.match[v]);
    return out;
}

Matching max_anti_matching(const Graph& g, const VertexSet& m, std::optional<int> stop_at) {
    for (Vertex v : m)
        if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
    for (size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] >= m[i + 1]) throw InvalidInput("vertex set not sorted");
    if (stop_at && *stop_at <= 0) return {};

    // Greedy maximal anti-matching straight on g[m]; no complement needed.
    Matching greedy;
    {
        std::vector<char> taken(m.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (taken[i]) continue;
            const VertexSet& nb = g.neighbors(m[i]);
            for (size_t j = i + 1; j < m.size(); ++j) {
                if (taken[j] || std::binary_search(nb.begin(), nb.end(), m[j])) continue;
                taken[i] = taken[j] = 1;
                greedy.emplace_back(m[i], m[j]);
                break;
            }
        }
    }
    if (stop_at) {
        int target = *stop_at;
        if (static_cast<int>(greedy.size()) >= target) return greedy;
        // A maximal anti-matching is at least half a maximum one.
        if (2 * static_cast<int>(greedy.size()) < target) return greedy;
    }

    InducedSubgraph sub = induced_subgraph(g, m);
    Matching mm = maximum_matching(complement(sub.graph), stop_at);
    for (auto& pr : mm) pr = VertexPair(sub.to_original[pr.u], sub.to_original[pr.v]);
    std::sort(mm.begin(), mm.end());
    return mm;
}

std::optional<Packing> build_packing(const std::vector<VertexSet>& sets, long long r) {
    if (r < 1) throw InvalidInput("packing target must be at least 1");
    std::vector<char> seen;
    for (const auto& s : sets)
        for (Vertex v : s) {
            if (v < 0) throw InvalidInput("vertex id out of range");
            if (static_cast<size_t>(v) >= seen.size()) seen.resize(v + 1, 0);
            if (seen[v]) throw InvalidInput("packing input sets overlap");
            seen[v] = 1;
        }

    Packing p;
    for (const auto& s : sets) {
        p.prefix.push_back(s);
        p.vertex_total += static_cast<long long>(s.size());
        if (p.vertex_total >= r) return p;
    }
    return std::nullopt;
}

} // namespace tpe
