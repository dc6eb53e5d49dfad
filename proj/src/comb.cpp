#include "tpe/comb.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tpe/decomposition.hpp"
#include "tpe/matching.hpp"

namespace tpe {

VertexSet Comb::shaft_union() const {
    VertexSet out;
    for (const VertexSet& cell : shaft) out = vs_union(out, cell);
    return out;
}

VertexSet Comb::teeth_union() const {
    VertexSet out;
    for (const VertexSet& tooth : teeth) out = vs_union(out, tooth);
    return out;
}

bool Comb::degenerate() const {
    if (shaft.empty()) return true;
    for (const VertexSet& cell : shaft)
        if (cell.empty()) return true;
    for (const VertexSet& tooth : teeth)
        if (tooth.empty()) return true;
    return false;
}

namespace {

// cell is a class of true twins and no vertex outside shares their closed
// neighborhood
bool is_critical_clique(const Graph& g, const VertexSet& cell) {
    VertexSet nb = g.closed_neighborhood(cell[0]);
    for (Vertex v : cell)
        if (v != cell[0] && g.closed_neighborhood(v) != nb) return false;
    for (Vertex w : nb)
        if (!vs_contains(cell, w) && g.closed_neighborhood(w) == nb) return false;
    return true;
}

VertexSet translate(const VertexSet& local, const std::vector<Vertex>& to_original) {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_original[v]);
    return out;
}

} // namespace

bool validate_comb(const Graph& g, const Comb& cb) {
    int l = cb.length();
    if (l == 0 || static_cast<int>(cb.teeth.size()) != l) return false;

    // every part sorted, in range, and disjoint from the others
    std::vector<char> seen(g.vertex_count(), 0);
    auto claim = [&](const VertexSet& part) {
        for (size_t i = 0; i < part.size(); ++i) {
            Vertex v = part[i];
            if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
            if (i > 0 && part[i - 1] >= v) return false;
            seen[v] = 1;
        }
        return true;
    };
    for (const VertexSet& cell : cb.shaft)
        if (cell.empty() || !claim(cell)) return false;
    for (const VertexSet& tooth : cb.teeth)
        if (tooth.empty() || !claim(tooth)) return false;
    if (!claim(cb.vp) || !claim(cb.vf)) return false;

    VertexSet c = cb.shaft_union();
    VertexSet r = cb.teeth_union();
    VertexSet cr = vs_union(c, r);
    if (!g.is_clique(c)) return false;

    for (const VertexSet& cell : cb.shaft)
        if (!is_critical_clique(g, cell)) return false;

    // teeth: nonempty trivially perfect modules, pairwise non-adjacent
    for (int i = 0; i < l; ++i) {
        if (!is_module(g, cb.teeth[i])) return false;
        if (find_obstruction(induced_subgraph(g, cb.teeth[i]).graph)) return false;
        VertexSet nb = neighborhood_of_set(g, cb.teeth[i]);
        for (int j = 0; j < l; ++j)
            if (j != i && !vs_disjoint(nb, cb.teeth[j])) return false;
    }

    // ladder: cell i sees exactly the teeth from i on, tooth i exactly the
    // cells up to i. Cells are twin classes and teeth are modules (checked
    // above), so a cell representative carries the whole cell's adjacency.
    std::vector<VertexSet> tooth_suffix(l + 1);
    for (int i = l - 1; i >= 0; --i)
        tooth_suffix[i] = vs_union(tooth_suffix[i + 1], cb.teeth[i]);
    VertexSet cell_prefix;
    for (int i = 0; i < l; ++i) {
        cell_prefix = vs_union(cell_prefix, cb.shaft[i]);
        if (vs_intersection(g.closed_neighborhood(cb.shaft[i][0]), r) != tooth_suffix[i])
            return false;
        if (vs_intersection(neighborhood_of_set(g, cb.teeth[i]), c) != cell_prefix)
            return false;
    }

    // outside C and R, teeth see exactly vp and the shaft exactly vp + vf
    VertexSet vpf = vs_union(cb.vp, cb.vf);
    for (int i = 0; i < l; ++i)
        if (vs_difference(neighborhood_of_set(g, cb.teeth[i]), cr) != cb.vp) return false;
    for (const VertexSet& cell : cb.shaft)
        if (vs_difference(g.closed_neighborhood(cell[0]), cr) != vpf) return false;
    return true;
}

Comb comb_from_ucd_path(const Graph& g, const Ucd& d, const std::vector<int>& path) {
    if (path.empty()) throw InvalidInput("comb path is empty");
    for (int t : path)
        if (t < 0 || t >= static_cast<int>(d.nodes.size()))
            throw InvalidInput("comb path node out of range");
    for (size_t i = 1; i < path.size(); ++i)
        if (d.nodes[path[i]].parent != path[i - 1])
            throw InvalidInput("comb path is not a top-down chain");

    // A trailing leaf contributes no tooth; drop it so its bag joins the tooth
    // of the node above. In a valid decomposition every internal node has at
    // least two children, so no other tooth can come out empty.
    std::vector<int> p = path;
    if (d.nodes[p.back()].children.empty()) p.pop_back();
    if (p.empty()) throw InvalidInput("comb path collapses to a single clique bag");

    Comb cb;
    for (size_t i = 0; i < p.size(); ++i) {
        const UcdNode& node = d.nodes[p[i]];
        for (Vertex v : node.bag)
            if (v < 0 || v >= g.vertex_count())
                throw InvalidInput("decomposition bag vertex out of range");
        cb.shaft.push_back(node.bag);
        VertexSet tooth;
        for (int ch : node.children) {
            if (i + 1 < p.size() && ch == p[i + 1]) continue;
            tooth = vs_union(tooth, d.subtree_vertices(ch));
        }
        cb.teeth.push_back(std::move(tooth));
    }
    for (int a = d.nodes[p.front()].parent; a != -1; a = d.nodes[a].parent)
        cb.vp = vs_union(cb.vp, d.nodes[a].bag);
    return cb;
}

Comb build_comb_small_antimatching(const Graph& g, bool fold_clique_tail,
                                   std::optional<int> threshold) {
    if (connected_components(g).size() != 1)
        throw InvalidInput("comb construction needs a connected graph");
    if (find_obstruction(g))
        throw InvalidInput("comb construction needs a trivially perfect graph");
    int t;
    if (threshold) {
        t = *threshold;
        if (t < 0) throw InvalidInput("component threshold must be nonnegative");
    } else {
        t = static_cast<int>(max_anti_matching(g, all_vertices(g)).size());
    }

    // Peel universal cliques, descending into the unique component larger
    // than t. Removing the universal clique of a connected graph leaves zero
    // or at least two components, so every tooth before the last is nonempty.
    Comb cb;
    VertexSet cur = all_vertices(g);
    while (true) {
        InducedSubgraph sub = induced_subgraph(g, cur);
        cb.shaft.push_back(translate(universal_clique(sub.graph), sub.to_original));
        VertexSet rest = vs_difference(cur, cb.shaft.back());
        if (rest.empty()) {
            cb.teeth.emplace_back(); // peeled down to a clique: degenerate tail
            break;
        }
        std::vector<VertexSet> comps = connected_components(g, rest);
        int big = -1;
        for (size_t i = 0; i < comps.size(); ++i)
            if (static_cast<int>(comps[i].size()) > t
                && (big < 0 || comps[i].size() > comps[big].size()))
                big = static_cast<int>(i);
        if (big < 0) {
            cb.teeth.push_back(std::move(rest)); // all components small: final teeth
            break;
        }
        if (fold_clique_tail && g.is_clique(comps[big])) {
            cb.teeth.push_back(std::move(rest)); // clique tail joins the last tooth
            break;
        }
        cb.teeth.push_back(vs_difference(rest, comps[big]));
        cur = std::move(comps[big]);
    }
    return cb;
}

std::optional<Comb> canonicalize_comb(const Graph& g, const VertexSet& c, const VertexSet& r) {
    auto sorted_strict = [](const VertexSet& s) {
        return std::adjacent_find(s.begin(), s.end(), std::greater_equal<Vertex>()) == s.end();
    };
    if (!sorted_strict(c) || !sorted_strict(r))
        throw InvalidInput("comb vertex sets must be sorted and duplicate-free");
    if (c.empty() || r.empty() || !vs_disjoint(c, r)) return std::nullopt;

    // cells = classes of equal closed neighborhood inside C, ordered by how
    // much of R they see (strictly decreasing for any real comb); ties by
    // smallest member for a deterministic reject
    std::map<VertexSet, VertexSet> by_nbhd;
    for (Vertex v : c) by_nbhd[g.closed_neighborhood(v)].push_back(v);
    struct Cell {
        VertexSet members;
        VertexSet reach; // N(cell) restricted to R
    };
    std::vector<Cell> cells;
    for (auto& [nb, members] : by_nbhd)
        cells.push_back({std::move(members), vs_intersection(nb, r)});
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.reach.size() != b.reach.size()) return a.reach.size() > b.reach.size();
        return a.members.front() < b.members.front();
    });
    if (cells.front().reach != r) return std::nullopt;

    Comb cb;
    int l = static_cast<int>(cells.size());
    for (int i = 0; i < l; ++i) {
        const VertexSet& next = i + 1 < l ? cells[i + 1].reach : VertexSet{};
        if (!vs_is_subset(next, cells[i].reach)) return std::nullopt;
        VertexSet tooth = vs_difference(cells[i].reach, next);
        if (tooth.empty()) return std::nullopt;
        cb.shaft.push_back(std::move(cells[i].members));
        cb.teeth.push_back(std::move(tooth));
    }

    VertexSet cr = vs_union(c, r);
    cb.vp = vs_difference(g.closed_neighborhood(r.front()), cr);
    cb.vf = vs_difference(vs_difference(g.closed_neighborhood(c.front()), cr), cb.vp);
    return cb;
}

namespace {

// Validates, deduplicates and keeps only combs long enough for the shaft and
// teeth rules (a length-1 comb can never satisfy their packing preconditions).
struct CombCollector {
    const Graph& g;
    std::set<std::string> keys;
    std::vector<Comb> out;

    void offer_sets(const VertexSet& c, const VertexSet& r) {
        std::optional<Comb> cb = canonicalize_comb(g, c, r);
        if (cb) offer(*cb);
    }

    void offer(const Comb& cb) {
        if (cb.length() < 2 || cb.degenerate()) return;
        if (!validate_comb(g, cb)) return;
        if (keys.insert(comb_to_string(cb)).second) out.push_back(cb);
    }
};

// Combs living inside trivially perfect strong modules: every top-down
// decomposition path from a component's root to an internal node, plus the
// small-anti-matching cover (both tail treatments, descending below k only).
// Cell partition and vp/vf are recomputed against the host graph, which also
// absorbs the module's outside neighborhood into vp.
void combs_from_tp_modules(const Graph& g, int k, CombCollector& col) {
    for (const VertexSet& m : trivially_perfect_modules(g)) {
        if (m.size() < 2) continue;
        for (const VertexSet& comp : connected_components(g, m)) {
            if (comp.size() < 2) continue;
            InducedSubgraph sub = induced_subgraph(g, comp);
            Ucd d = build_ucd(sub.graph);
            for (int t = 0; t < static_cast<int>(d.nodes.size()); ++t) {
                // a proper internal node ends a path whose last tooth is
                // nonempty; starting from the root keeps the shaft maximal
                if (d.nodes[t].parent == -1 || d.nodes[t].children.empty()) continue;
                std::vector<int> path;
                for (int s = t; s != -1; s = d.nodes[s].parent) path.push_back(s);
                std::reverse(path.begin(), path.end());
                Comb local = comb_from_ucd_path(sub.graph, d, path);
                col.offer_sets(translate(local.shaft_union(), sub.to_original),
                               translate(local.teeth_union(), sub.to_original));
            }
            if (d.nodes.size() == 1) continue; // clique component: no teeth
            for (bool fold : {false, true}) {
                Comb local = build_comb_small_antimatching(sub.graph, fold, k);
                if (local.degenerate()) continue;
                col.offer_sets(translate(local.shaft_union(), sub.to_original),
                               translate(local.teeth_union(), sub.to_original));
            }
        }
    }
}

// Combs grown from a chain of critical cliques with strictly nested closed
// neighborhoods. Vertices outside the chain are classified by the longest
// prefix of chain cells they fully see: a proper prefix puts them in that
// cell's tooth, the full chain makes them candidates for vp, vf or the last
// tooth. A vertex seeing a later cell without an earlier one caps the usable
// chain length. The assembled comb is only a candidate; offer() re-validates
// every requirement against g.
void chain_comb(const Graph& g, const CriticalCliquePartition& cc,
                const std::vector<int>& chain, CombCollector& col) {
    int n = g.vertex_count();
    std::vector<int> ch = chain;
    std::vector<int> prefix(n, 0);
    std::vector<char> in_c(n, 0);
    while (true) {
        int l = static_cast<int>(ch.size());
        if (l < 2) return;
        std::fill(in_c.begin(), in_c.end(), 0);
        std::vector<Vertex> reps(l);
        for (int i = 0; i < l; ++i) {
            reps[i] = cc.classes[ch[i]][0];
            for (Vertex v : cc.classes[ch[i]]) in_c[v] = 1;
        }
        int cap = l;
        for (Vertex v = 0; v < n; ++v) {
            if (in_c[v]) continue;
            int p = 0;
            while (p < l && g.is_edge(v, reps[p])) ++p;
            prefix[v] = p;
            for (int j = p + 1; j < l; ++j)
                if (g.is_edge(v, reps[j])) {
                    cap = std::min(cap, p);
                    break;
                }
        }
        if (cap == l) break;
        ch.resize(cap);
    }

    int l = static_cast<int>(ch.size());
    std::vector<VertexSet> teeth(l);
    VertexSet full;
    for (Vertex v = 0; v < n; ++v) {
        if (in_c[v] || prefix[v] == 0) continue;
        if (prefix[v] == l)
            full.push_back(v);
        else
            teeth[prefix[v] - 1].push_back(v);
    }
    for (int i = 0; i + 1 < l; ++i)
        if (teeth[i].empty()) return;

    // Split the full-prefix vertices: vp must see all of tooth 1, while the
    // last tooth and vf cannot touch it. The last tooth is then recognized by
    // seeing no earlier tooth and nothing outside the comb except vp.
    auto sees_all = [&](Vertex v, const VertexSet& s) {
        for (Vertex w : s)
            if (!g.is_edge(v, w)) return false;
        return true;
    };
    VertexSet vp, rest;
    for (Vertex v : full)
        (sees_all(v, teeth[0]) ? vp : rest).push_back(v);
    VertexSet blocked = teeth[0];
    for (int i = 1; i + 1 < l; ++i) blocked = vs_union(blocked, teeth[i]);
    VertexSet c;
    for (int i = 0; i < l; ++i) c = vs_union(c, cc.classes[ch[i]]);
    VertexSet inner = vs_union(vs_union(c, blocked), rest);
    VertexSet& last = teeth[l - 1];
    VertexSet vf;
    for (Vertex y : rest) {
        if (!vs_disjoint(g.neighbors(y), blocked) ||
            vs_difference(g.neighbors(y), inner) != vp)
            vf.push_back(y);
        else
            last.push_back(y);
    }
    if (last.empty()) return;

    Comb cb;
    for (int i = 0; i < l; ++i) cb.shaft.push_back(cc.classes[ch[i]]);
    cb.teeth = std::move(teeth);
    cb.vp = std::move(vp);
    cb.vf = std::move(vf);
    col.offer(cb);
}

void combs_from_chains(const Graph& g, CombCollector& col) {
    CriticalCliquePartition cc = critical_cliques(g);
    int nc = static_cast<int>(cc.classes.size());
    std::vector<VertexSet> nbhd(nc);
    for (int a = 0; a < nc; ++a) nbhd[a] = g.closed_neighborhood(cc.classes[a][0]);

    for (int seed = 0; seed < nc; ++seed) {
        std::vector<int> chain{seed};
        std::vector<char> in_chain(nc, 0);
        in_chain[seed] = 1;
        // repeatedly descend to the largest strictly nested neighbor class
        while (true) {
            int last = chain.back();
            int best = -1;
            for (Vertex w : g.neighbors(cc.classes[last][0])) {
                int cand = cc.class_of[w];
                if (in_chain[cand]) continue;
                if (nbhd[cand].size() >= nbhd[last].size()) continue;
                if (!vs_is_subset(nbhd[cand], nbhd[last])) continue;
                if (best < 0 || nbhd[cand].size() > nbhd[best].size()
                    || (nbhd[cand].size() == nbhd[best].size() && cand < best))
                    best = cand;
            }
            if (best < 0) break;
            chain.push_back(best);
            in_chain[best] = 1;
        }
        if (chain.size() >= 2) chain_comb(g, cc, chain, col);
    }
}

} // namespace

std::vector<Comb> enumerate_reducible_combs(const Graph& g, int k) {
    CombCollector col{g, {}, {}};
    combs_from_tp_modules(g, std::max(k, 0), col);
    combs_from_chains(g, col);
    return std::move(col.out);
}

std::string comb_to_string(const Comb& cb) {
    std::ostringstream out;
    auto line = [&](const std::string& label, const VertexSet& part) {
        out << label << ':';
        for (Vertex v : part) out << ' ' << v;
        out << '\n';
    };
    for (size_t i = 0; i < cb.shaft.size(); ++i)
        line("SHAFT " + std::to_string(i + 1), cb.shaft[i]);
    for (size_t i = 0; i < cb.teeth.size(); ++i)
        line("TOOTH " + std::to_string(i + 1), cb.teeth[i]);
    line("VP", cb.vp);
    line("VF", cb.vf);
    return out.str();
}

} // namespace tpe
