#include "tpe/graph.hpp"

namespace tpe {

Graph::Graph(int n, const std::vector<VertexPair>& edges) {
    if (n < 0) throw InvalidInput("negative vertex count");
    GraphBuilder b(n);
    for (const auto& e : edges) b.add_edge(e.u, e.v);
    *this = b.build();
}

bool Graph::is_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    if (u == v) return false;
    const VertexSet& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

VertexSet Graph::closed_neighborhood(Vertex u) const {
    VertexSet r = adj_[check(u)];
    r.insert(std::lower_bound(r.begin(), r.end(), u), u);
    return r;
}

bool Graph::is_clique(const VertexSet& s) const {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!is_edge(s[i], s[j])) return false;
    return true;
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Vertex GraphBuilder::add_vertex() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop");
    if (has_edge(u, v)) throw InvalidInput("duplicate edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) throw InvalidInput("removing absent edge");
    std::erase(adj_[u], v);
    std::erase(adj_[v], u);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
    int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

Graph GraphBuilder::build() const {
    Graph g;
    g.n_ = vertex_count();
    g.adj_.resize(g.n_);
    long long m = 0;
    for (int u = 0; u < g.n_; ++u) {
        g.adj_[u] = adj_[u];
        std::sort(g.adj_[u].begin(), g.adj_[u].end());
        m += static_cast<long long>(g.adj_[u].size());
    }
    g.m_ = m / 2;
    return g;
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet vs_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet vs_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool vs_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool vs_is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool vs_disjoint(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return false;
    }
    return true;
}

void vs_normalize(VertexSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

Graph apply_edits(const Graph& g, const EditSet& f) {
    for (size_t i = 0; i + 1 < f.size(); ++i)
        if (!(f[i] < f[i + 1])) throw InvalidInput("edit set not sorted or has duplicates");
    GraphBuilder b(g.vertex_count());
    for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
    for (const auto& p : f) {
        if (p.u == p.v) throw InvalidInput("self-loop in edit set");
        if (b.has_edge(p.u, p.v)) b.remove_edge(p.u, p.v);
        else b.add_edge(p.u, p.v);
    }
    return b.build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] >= s[i + 1]) throw InvalidInput("vertex set not sorted");
    InducedSubgraph out;
    out.to_original = s;
    out.to_local.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i) out.to_local[s[i]] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbors(s[i]))
            if (w > s[i] && out.to_local[w] >= 0) b.add_edge(static_cast<int>(i), out.to_local[w]);
    out.graph = b.build();
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(g, all_vertices(g));
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
    std::vector<char> in(g.vertex_count(), 0), done(g.vertex_count(), 0);
    for (Vertex v : within) {
        if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
        in[v] = 1;
    }
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s : within) {
        if (done[s]) continue;
        out.emplace_back();
        done[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (Vertex w : g.neighbors(u))
                if (in[w] && !done[w]) {
                    done[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
        in[v] = 1;
    }
    VertexSet r;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (!in[w]) {
                r.push_back(w);
                in[w] = 1;
            }
    std::sort(r.begin(), r.end());
    return r;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        const VertexSet& a = g.neighbors(u);
        size_t i = 0;
        for (Vertex v = u + 1; v < n; ++v) {
            while (i < a.size() && a[i] < v) ++i;
            if (i == a.size() || a[i] != v) b.add_edge(u, v);
        }
    }
    return b.build();
}

VertexSet all_vertices(const Graph& g) {
    VertexSet r(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) r[i] = i;
    return r;
}

} // namespace tpe
