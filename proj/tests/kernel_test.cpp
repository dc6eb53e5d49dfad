#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "tpe/decomposition.hpp"
#include "tpe/kernel.hpp"
#include "tpe/solver.hpp"

using namespace tpe;

namespace {

// Shaft of l singleton critical cliques (ids 0..l-1 forming a clique) with
// singleton teeth (ids l..2l-1); tooth l+j sees cells 0..j, giving the comb
// ladder exactly.
struct Ladder {
    Graph graph;
    Comb comb;
};

Ladder ladder(int l) {
    // Vertex 2l sees the whole shaft and nothing else (vf); without it the
    // last cell and last tooth would be true twins and the cells would not
    // be critical cliques.
    GraphBuilder b(2 * l + 1);
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) b.add_edge(i, j);
    for (int j = 0; j < l; ++j)
        for (int i = 0; i <= j; ++i) b.add_edge(i, l + j);
    for (int i = 0; i < l; ++i) b.add_edge(i, 2 * l);
    Ladder out;
    out.graph = b.build();
    for (int i = 0; i < l; ++i) {
        out.comb.shaft.push_back({i});
        out.comb.teeth.push_back({l + i});
    }
    out.comb.vf = {2 * l};
    return out;
}

// The same comb embedded in a non-TP host: vertex 2l+1 dominates the comb
// (vp) and hangs onto one corner of a C4 (ids 2l+2..2l+5).
Ladder ladder_host(int l) {
    Ladder base = ladder(l);
    GraphBuilder b(2 * l + 6);
    for (const VertexPair& e : base.graph.edges()) b.add_edge(e.u, e.v);
    for (int v = 0; v < 2 * l; ++v) b.add_edge(v, 2 * l + 1);
    b.add_edge(2 * l + 1, 2 * l + 2);
    b.add_edge(2 * l + 2, 2 * l + 3);
    b.add_edge(2 * l + 3, 2 * l + 4);
    b.add_edge(2 * l + 4, 2 * l + 5);
    b.add_edge(2 * l + 2, 2 * l + 5);
    base.graph = b.build();
    base.comb.vp = {2 * l + 1};
    return base;
}

Instance make(const Graph& g, int k, EditMode mode = EditMode::editing) {
    Instance inst;
    inst.graph = g;
    inst.k = k;
    inst.mode = mode;
    return inst;
}

Graph star(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

} // namespace

TEST_CASE("mode names round-trip") {
    for (EditMode m : {EditMode::editing, EditMode::deletion, EditMode::completion})
        CHECK(edit_mode_from_name(edit_mode_name(m)) == m);
    CHECK(edit_mode_from_name("nonsense") == std::nullopt);
}

TEST_CASE("rule 1 removes trivially perfect components") {
    Graph mix = oracle::disjoint_union(oracle::cycle_graph(4), oracle::complete_graph(3));
    RuleResult rr = rule1_remove_tp_components(make(mix, 1));
    REQUIRE(rr.applied);
    CHECK(rr.step.rule == 1);
    CHECK(rr.step.removed == VertexSet{4, 5, 6});
    CHECK(rr.inst.graph == oracle::cycle_graph(4));
    CHECK(rr.inst.k == 1);

    RuleResult all = rule1_remove_tp_components(make(oracle::complete_graph(5), 0));
    REQUIRE(all.applied);
    CHECK(all.inst.graph.vertex_count() == 0);

    CHECK_FALSE(rule1_remove_tp_components(make(oracle::path_graph(4), 1)).applied);
}

TEST_CASE("rule 2 trims critical cliques to k+1 keeping smallest ids") {
    RuleResult rr = rule2_trim_critical_cliques(make(oracle::complete_graph(10), 2));
    REQUIRE(rr.applied);
    CHECK(rr.step.rule == 2);
    CHECK(rr.step.removed == VertexSet{3, 4, 5, 6, 7, 8, 9});
    CHECK(rr.inst.graph == oracle::complete_graph(3));

    RuleResult k4 = rule2_trim_critical_cliques(make(oracle::complete_graph(4), 1));
    REQUIRE(k4.applied);
    CHECK(k4.step.removed == VertexSet{2, 3});

    CHECK_FALSE(rule2_trim_critical_cliques(make(oracle::path_graph(4), 0)).applied);
}

TEST_CASE("rule 3 keeps both sides of k+1 anti-matching pairs") {
    // Independent module of size 2k+4 under a star center, k=1.
    Graph g = star(6);
    VertexSet m{1, 2, 3, 4, 5, 6};
    RuleResult rr = rule3_antimatching_module(make(g, 1), m);
    REQUIRE(rr.applied);
    CHECK(rr.step.rule == 3);
    CHECK(rr.step.removed.size() == 2);
    CHECK(vs_is_subset(rr.step.removed, m));
    CHECK(rr.inst.graph.vertex_count() == 5);   // center + 2(k+1)

    // Too small an anti-matching leaves the module alone.
    CHECK_FALSE(rule3_antimatching_module(make(star(2), 1), {1, 2}).applied);
    // A clique module has no anti-matching at all.
    CHECK_FALSE(
        rule3_antimatching_module(make(oracle::complete_graph(4), 0), {0, 1, 2, 3})
            .applied);
}

TEST_CASE("rule 3 rejects non-modules and non-TP modules") {
    CHECK_THROWS_AS(rule3_antimatching_module(make(oracle::path_graph(4), 1), {0, 1}),
                    InvalidInput);
    Graph mix = oracle::disjoint_union(oracle::cycle_graph(4), oracle::complete_graph(3));
    CHECK_THROWS_AS(rule3_antimatching_module(make(mix, 1), {0, 1, 2, 3}),
                    InvalidInput);
    CHECK_THROWS_AS(rule3_antimatching_module(make(mix, 1), {}), InvalidInput);
}

TEST_CASE("rule 4 removes the middle of a long shaft") {
    Ladder lad = ladder(10);
    RuleResult rr = rule4_shaft(make(lad.graph, 1), lad.comb);
    REQUIRE(rr.applied);
    CHECK(rr.step.rule == 4);
    // 2k+1 = 3: front packing = cells 1..3, back packing = cells 8..10.
    CHECK(rr.step.removed == VertexSet{3, 4, 5, 6});
    CHECK(rr.inst.graph.vertex_count() == 17);

    // Same arithmetic when the comb sits inside a larger graph, and the
    // decision survives in every mode.
    Ladder host = ladder_host(10);
    for (EditMode mode : {EditMode::editing, EditMode::deletion, EditMode::completion}) {
        Instance a = make(host.graph, 1, mode);
        RuleResult hr = rule4_shaft(a, host.comb);
        REQUIRE(hr.applied);
        CHECK(hr.step.removed == VertexSet{3, 4, 5, 6});
        CHECK(solve(hr.inst).yes == solve(a).yes);
    }
}

TEST_CASE("rule 4 leaves short shafts alone") {
    Ladder five = ladder(5);
    CHECK_FALSE(rule4_shaft(make(five.graph, 1), five.comb).applied);
    // Packings meet in the middle cell-for-cell: nothing strictly between.
    Ladder ten = ladder(10);
    CHECK_FALSE(rule4_shaft(make(ten.graph, 2), ten.comb).applied);
}

TEST_CASE("rule 5 removes teeth between the three packings") {
    Ladder lad = ladder(12);
    RuleResult rr = rule5_teeth(make(lad.graph, 1), lad.comb);
    REQUIRE(rr.applied);
    CHECK(rr.step.rule == 5);
    // R_a = teeth 1-3, R_c = teeth 10-12, R_b = teeth 7-9: drop teeth 4-6.
    CHECK(rr.step.removed == VertexSet{15, 16, 17});
    CHECK(rr.inst.graph.vertex_count() == 22);

    Ladder host = ladder_host(12);
    for (EditMode mode : {EditMode::editing, EditMode::deletion, EditMode::completion}) {
        Instance a = make(host.graph, 1, mode);
        RuleResult hr = rule5_teeth(a, host.comb);
        REQUIRE(hr.applied);
        CHECK(hr.step.removed == VertexSet{15, 16, 17});
        CHECK(solve(hr.inst).yes == solve(a).yes);
    }
}

TEST_CASE("rule 5 leaves short teeth lists alone") {
    Ladder lad = ladder(12);
    CHECK_FALSE(rule5_teeth(make(lad.graph, 2), lad.comb).applied);
    Ladder two = ladder(2);
    CHECK_FALSE(rule5_teeth(make(two.graph, 0), two.comb).applied);
}

TEST_CASE("rules 4 and 5 reject invalid combs") {
    Ladder lad = ladder(4);
    Comb broken = lad.comb;
    std::swap(broken.teeth[0], broken.teeth[1]);
    CHECK_THROWS_AS(rule4_shaft(make(lad.graph, 1), broken), InvalidInput);
    CHECK_THROWS_AS(rule5_teeth(make(lad.graph, 1), broken), InvalidInput);
}

TEST_CASE("reduction reaches a fixed point with an identity trace on reduced input") {
    ReductionTrace t = reduce_exhaustively(make(oracle::path_graph(4), 1));
    CHECK(t.steps.empty());
    CHECK(t.final_instance.graph == oracle::path_graph(4));
    CHECK(trace_original_ids(t) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("reduction clears a TP clique component in one rule-1 step") {
    Graph mix = oracle::disjoint_union(oracle::cycle_graph(4), oracle::complete_graph(6));
    ReductionTrace t = reduce_exhaustively(make(mix, 1));
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].rule == 1);
    CHECK(t.steps[0].removed == VertexSet{4, 5, 6, 7, 8, 9});
    CHECK(t.final_instance.graph == oracle::cycle_graph(4));
    CHECK(t.final_instance.k == 1);
}

TEST_CASE("trace serialization format") {
    Graph mix = oracle::disjoint_union(oracle::cycle_graph(4), oracle::complete_graph(3));
    ReductionTrace t = reduce_exhaustively(make(mix, 1));
    REQUIRE(t.steps.size() == 1);
    CHECK(trace_to_string(t) ==
          "RULE1 removed={4,5,6} map=[0->0,1->1,2->2,3->3]\n");
}

TEST_CASE("ladder instances reduce, stay clean, and replay") {
    for (int l : {10, 12}) {
        Ladder lad = ladder(l);
        Instance inst = make(lad.graph, 1);
        ReductionTrace t = reduce_exhaustively(inst);
        CAPTURE(l);
        REQUIRE(!t.steps.empty());
        CHECK(t.final_instance.graph.vertex_count() < lad.graph.vertex_count());
        CHECK(t.final_instance.k == 1);
        CHECK(audit_bounds(t.final_instance).clean());
        // Idempotence.
        CHECK(reduce_exhaustively(t.final_instance).steps.empty());
        // Replay: survivors induce exactly the final graph.
        VertexSet survivors = trace_original_ids(t);
        CHECK(induced_subgraph(lad.graph, survivors).graph == t.final_instance.graph);
    }
}

TEST_CASE("reduction trace replays on planted instances") {
    tpe::Rng rng(23);
    for (int round = 0; round < 25; ++round) {
        GenSpec spec;
        spec.seed = 1000 + round;
        spec.n = 30 + static_cast<int>(rng.below(60));
        spec.edits = static_cast<int>(rng.below(4));
        spec.mode = EditMode::editing;
        PlantedInstance p = plant_instance(spec);
        ReductionTrace t = reduce_exhaustively(p.instance);
        CAPTURE(round);
        VertexSet survivors = trace_original_ids(t);
        REQUIRE(induced_subgraph(p.instance.graph, survivors).graph ==
                t.final_instance.graph);
        REQUIRE(t.final_instance.k == p.instance.k);
        REQUIRE(audit_bounds(t.final_instance).clean());
        REQUIRE(reduce_exhaustively(t.final_instance).steps.empty());
        // Monotone: removed sets in the trace are disjoint and sum up.
        size_t removed_total = 0;
        for (const auto& step : t.steps) removed_total += step.removed.size();
        REQUIRE(removed_total + survivors.size() ==
                static_cast<size_t>(p.instance.graph.vertex_count()));
    }
}

TEST_CASE("audit flags oversized structures and passes clean ones") {
    CHECK(audit_bounds(make(Graph{}, 0)).clean());
    CHECK(audit_bounds(make(oracle::complete_graph(4), 3)).clean());
    AuditReport bad = audit_bounds(make(oracle::complete_graph(4), 2));
    CHECK_FALSE(bad.clean());
    REQUIRE(!bad.violations.empty());
    CHECK(bad.violations[0].find("critical clique") != std::string::npos);
}

TEST_CASE("every rule preserves the solver decision") {
    // Structured fixtures where specific rules fire, all at small k.
    std::vector<Instance> fixtures;
    fixtures.push_back(make(
        oracle::disjoint_union(oracle::cycle_graph(4), oracle::complete_graph(3)), 1));
    fixtures.push_back(make(oracle::complete_graph(10), 2));
    fixtures.push_back(make(star(6), 1));
    fixtures.push_back(make(ladder(10).graph, 1));
    fixtures.push_back(make(ladder(12).graph, 1));
    fixtures.push_back(make(ladder_host(10).graph, 1));
    fixtures.push_back(make(ladder_host(12).graph, 1));

    for (EditMode mode : {EditMode::editing, EditMode::deletion, EditMode::completion}) {
        for (Instance inst : fixtures) {
            inst.mode = mode;
            bool want = solve(inst).yes;
            CAPTURE(edit_mode_name(mode));
            CAPTURE(inst.graph.vertex_count());

            RuleResult r1 = rule1_remove_tp_components(inst);
            if (r1.applied) REQUIRE(solve(r1.inst).yes == want);
            RuleResult r2 = rule2_trim_critical_cliques(inst);
            if (r2.applied) REQUIRE(solve(r2.inst).yes == want);
            for (const VertexSet& m : trivially_perfect_modules(inst.graph)) {
                if (m.size() < 2) continue;
                RuleResult r3 = rule3_antimatching_module(inst, m);
                if (r3.applied) REQUIRE(solve(r3.inst).yes == want);
            }
            for (const Comb& cb : enumerate_reducible_combs(inst.graph, inst.k)) {
                RuleResult r4 = rule4_shaft(inst, cb);
                if (r4.applied) REQUIRE(solve(r4.inst).yes == want);
                RuleResult r5 = rule5_teeth(inst, cb);
                if (r5.applied) REQUIRE(solve(r5.inst).yes == want);
            }
            ReductionTrace t = reduce_exhaustively(inst);
            REQUIRE(solve(t.final_instance).yes == want);
        }
    }
}
