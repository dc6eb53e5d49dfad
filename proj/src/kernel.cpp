#include "tpe/kernel.hpp"

#include <numeric>
#include <sstream>

#include "tpe/decomposition.hpp"
#include "tpe/matching.hpp"

namespace tpe {

std::string edit_mode_name(EditMode mode) {
    switch (mode) {
        case EditMode::editing: return "editing";
        case EditMode::deletion: return "deletion";
        case EditMode::completion: return "completion";
    }
    return "editing";
}

std::optional<EditMode> edit_mode_from_name(const std::string& name) {
    if (name == "editing") return EditMode::editing;
    if (name == "deletion") return EditMode::deletion;
    if (name == "completion") return EditMode::completion;
    return std::nullopt;
}

namespace {

RuleResult unchanged(const Instance& inst) {
    RuleResult out;
    out.inst = inst;
    return out;
}

// Compacts the graph after deleting removed (sorted, possibly empty); the
// step's map is exactly the induced subgraph's id translation.
RuleResult removal(const Instance& inst, int rule, const char* target, VertexSet removed) {
    if (removed.empty()) return unchanged(inst);
    RuleResult out;
    out.applied = true;
    InducedSubgraph sub =
        induced_subgraph(inst.graph, vs_difference(all_vertices(inst.graph), removed));
    out.inst = Instance{sub.graph, inst.k, inst.mode};
    out.step.rule = rule;
    out.step.target = target;
    out.step.removed = std::move(removed);
    out.step.map = std::move(sub.to_local);
    return out;
}

} // namespace

RuleResult rule1_remove_tp_components(const Instance& inst) {
    VertexSet removed;
    for (const VertexSet& comp : connected_components(inst.graph))
        if (!find_obstruction(induced_subgraph(inst.graph, comp).graph))
            removed = vs_union(removed, comp);
    return removal(inst, 1, "trivially perfect components", std::move(removed));
}

RuleResult rule2_trim_critical_cliques(const Instance& inst) {
    VertexSet removed;
    for (const VertexSet& cls : critical_cliques(inst.graph).classes)
        if (static_cast<int>(cls.size()) > inst.k + 1)
            removed.insert(removed.end(), cls.begin() + (inst.k + 1), cls.end());
    vs_normalize(removed);
    return removal(inst, 2, "oversized critical cliques", std::move(removed));
}

RuleResult rule3_antimatching_module(const Instance& inst, const VertexSet& m) {
    if (!is_module(inst.graph, m)) throw InvalidInput("rule 3 expects a module");
    if (find_obstruction(induced_subgraph(inst.graph, m).graph))
        throw InvalidInput("rule 3 expects a trivially perfect module");
    int need = inst.k + 1;
    Matching am = max_anti_matching(inst.graph, m, need);
    if (static_cast<int>(am.size()) < need) return unchanged(inst);
    VertexSet keep;
    keep.reserve(2 * need);
    for (int i = 0; i < need; ++i) {
        keep.push_back(am[i].u);
        keep.push_back(am[i].v);
    }
    vs_normalize(keep);
    return removal(inst, 3, "anti-matching module", vs_difference(m, keep));
}

RuleResult rule4_shaft(const Instance& inst, const Comb& cb) {
    if (!validate_comb(inst.graph, cb)) throw InvalidInput("rule 4 expects a valid comb");
    long long need = 2LL * inst.k + 1;
    std::optional<Packing> a = build_packing(cb.shaft, need);
    std::vector<VertexSet> rev(cb.shaft.rbegin(), cb.shaft.rend());
    std::optional<Packing> b = build_packing(rev, need);
    if (!a || !b) return unchanged(inst);
    int l = cb.length();
    int p = static_cast<int>(a->prefix.size());
    int q = static_cast<int>(b->prefix.size());
    if (p + q > l) return unchanged(inst); // the packings share a cell
    VertexSet removed;
    for (int i = p; i < l - q; ++i) removed = vs_union(removed, cb.shaft[i]);
    return removal(inst, 4, "comb shaft", std::move(removed));
}

RuleResult rule5_teeth(const Instance& inst, const Comb& cb) {
    if (!validate_comb(inst.graph, cb)) throw InvalidInput("rule 5 expects a valid comb");
    long long need = 2LL * inst.k + 1;
    int l = cb.length();
    std::optional<Packing> a = build_packing(cb.teeth, need);
    std::vector<VertexSet> back(cb.teeth.rbegin(), cb.teeth.rend());
    std::optional<Packing> c = build_packing(back, need);
    if (!a || !c) return unchanged(inst);
    int pa = static_cast<int>(a->prefix.size());
    int q = l - static_cast<int>(c->prefix.size()) + 1; // R_c = teeth q..l, 1-based
    if (q <= 1) return unchanged(inst);
    std::vector<VertexSet> mid(cb.teeth.rend() - (q - 1), cb.teeth.rend()); // R_{q-1}..R_1
    std::optional<Packing> b = build_packing(mid, need);
    if (!b) return unchanged(inst);
    int pb = static_cast<int>(b->prefix.size()); // R_b = teeth q-pb..q-1
    if (pa >= q - pb) return unchanged(inst);    // R_a meets R_b
    VertexSet removed;
    for (int i = pa; i < q - pb - 1; ++i) removed = vs_union(removed, cb.teeth[i]);
    return removal(inst, 5, "comb teeth", std::move(removed));
}

namespace {

// Small-anti-matching comb of the largest component of module m, cells and
// vp/vf recomputed against the full graph. Descending only into components
// larger than k keeps |R| <= 3k+1 there, so a module with more than 11k+2
// vertices yields |C| > 6k+2 and the shaft rule fires.
std::optional<Comb> module_shaft_comb(const Graph& g, int k, const VertexSet& m) {
    std::vector<VertexSet> comps = connected_components(g, m);
    size_t big = 0;
    for (size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[big].size()) big = i;
    InducedSubgraph sub = induced_subgraph(g, comps[big]);
    Comb local = build_comb_small_antimatching(sub.graph, true, k);
    if (local.degenerate()) return std::nullopt;
    auto translate = [&](const VertexSet& s) {
        VertexSet out;
        out.reserve(s.size());
        for (Vertex v : s) out.push_back(sub.to_original[v]);
        return out;
    };
    std::optional<Comb> cano =
        canonicalize_comb(g, translate(local.shaft_union()), translate(local.teeth_union()));
    if (!cano || !validate_comb(g, *cano)) return std::nullopt;
    return cano;
}

} // namespace

ReductionTrace reduce_exhaustively(const Instance& inst) {
    ReductionTrace out;
    Instance cur = inst;
    int n0 = inst.graph.vertex_count();
    std::vector<Vertex> cum(n0); // original -> current, -1 removed
    std::iota(cum.begin(), cum.end(), 0);
    std::vector<Vertex> orig_of(n0); // current -> original
    std::iota(orig_of.begin(), orig_of.end(), 0);

    auto record = [&](RuleResult&& rr) {
        ReductionStep step;
        step.rule = rr.step.rule;
        step.target = std::move(rr.step.target);
        step.removed.reserve(rr.step.removed.size());
        for (Vertex v : rr.step.removed) step.removed.push_back(orig_of[v]);
        for (Vertex o = 0; o < n0; ++o)
            if (cum[o] >= 0) cum[o] = rr.step.map[cum[o]];
        step.map = cum;
        orig_of.assign(rr.inst.graph.vertex_count(), -1);
        for (Vertex o = 0; o < n0; ++o)
            if (cum[o] >= 0) orig_of[cum[o]] = o;
        out.steps.push_back(std::move(step));
        cur = std::move(rr.inst);
    };

    for (bool changed = true; changed;) {
        changed = false;
        if (auto rr = rule1_remove_tp_components(cur); rr.applied) {
            record(std::move(rr));
            changed = true;
            continue;
        }
        if (auto rr = rule2_trim_critical_cliques(cur); rr.applied) {
            record(std::move(rr));
            changed = true;
            continue;
        }
        std::vector<VertexSet> modules = trivially_perfect_modules(cur.graph);
        for (const VertexSet& m : modules) {
            // modules come largest first; below 2(k+1)+1 vertices nothing can go
            if (static_cast<int>(m.size()) <= 2 * (cur.k + 1)) break;
            if (auto rr = rule3_antimatching_module(cur, m); rr.applied) {
                record(std::move(rr));
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (const VertexSet& m : modules) {
            if (static_cast<long long>(m.size()) <= 11LL * cur.k + 2) break;
            std::optional<Comb> cb = module_shaft_comb(cur.graph, cur.k, m);
            if (!cb) continue;
            if (auto rr = rule4_shaft(cur, *cb); rr.applied) {
                record(std::move(rr));
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (const Comb& cb : enumerate_reducible_combs(cur.graph, cur.k)) {
            if (auto rr = rule4_shaft(cur, cb); rr.applied) {
                record(std::move(rr));
                changed = true;
                break;
            }
            if (auto rr = rule5_teeth(cur, cb); rr.applied) {
                record(std::move(rr));
                changed = true;
                break;
            }
        }
    }
    out.final_instance = std::move(cur);
    return out;
}

std::vector<Vertex> trace_original_ids(const ReductionTrace& t) {
    int n = t.final_instance.graph.vertex_count();
    std::vector<Vertex> out(n);
    if (t.steps.empty()) {
        std::iota(out.begin(), out.end(), 0);
        return out;
    }
    const std::vector<Vertex>& last = t.steps.back().map;
    for (Vertex o = 0; o < static_cast<Vertex>(last.size()); ++o)
        if (last[o] >= 0) out[last[o]] = o;
    return out;
}

std::string trace_to_string(const ReductionTrace& t) {
    std::ostringstream out;
    for (const ReductionStep& s : t.steps) {
        out << "RULE" << s.rule << " removed={";
        for (size_t i = 0; i < s.removed.size(); ++i) {
            if (i) out << ',';
            out << s.removed[i];
        }
        out << "} map=[";
        bool first = true;
        for (Vertex o = 0; o < static_cast<Vertex>(s.map.size()); ++o) {
            if (s.map[o] < 0) continue;
            if (!first) out << ',';
            first = false;
            out << o << "->" << s.map[o];
        }
        out << "]\n";
    }
    return out.str();
}

AuditReport audit_bounds(const Instance& inst) {
    AuditReport out;
    long long k = inst.k;
    for (const VertexSet& cls : critical_cliques(inst.graph).classes)
        if (static_cast<long long>(cls.size()) > k + 1)
            out.violations.push_back("critical clique of size " + std::to_string(cls.size())
                                     + " exceeds k+1 = " + std::to_string(k + 1));
    for (const VertexSet& m : trivially_perfect_modules(inst.graph))
        if (static_cast<long long>(m.size()) > 11 * k + 2)
            out.violations.push_back("trivially perfect module of size "
                                     + std::to_string(m.size()) + " exceeds 11k+2 = "
                                     + std::to_string(11 * k + 2));
    for (const Comb& cb : enumerate_reducible_combs(inst.graph, inst.k)) {
        long long c = static_cast<long long>(cb.shaft_union().size());
        long long r = static_cast<long long>(cb.teeth_union().size());
        if (c > 6 * k + 2)
            out.violations.push_back("comb shaft of size " + std::to_string(c)
                                     + " exceeds 6k+2 = " + std::to_string(6 * k + 2));
        if (c + r > 45 * k + 8)
            out.violations.push_back("comb of size " + std::to_string(c + r)
                                     + " exceeds 45k+8 = " + std::to_string(45 * k + 8));
    }
    return out;
}

} // namespace tpe
