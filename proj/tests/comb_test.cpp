#include <doctest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "tpe/comb.hpp"
#include "tpe/matching.hpp"
#include "tpe/recognition.hpp"

using namespace tpe;

namespace {

// Minimal length-2 comb: shaft cells {0},{1}, teeth {2} and the non-adjacent
// pair {3,4}. The two-vertex second tooth keeps 1 from being a true twin of
// its tooth, so both cells are genuine critical cliques.
Graph comb5() {
    return oracle::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}});
}

Comb comb5_comb() {
    Comb cb;
    cb.shaft = {{0}, {1}};
    cb.teeth = {{2}, {3, 4}};
    return cb;
}

// Same comb plus vertex 5 seeing all of C u R (lands in V_p) and vertex 6
// seeing exactly the shaft (lands in V_f).
Graph comb7() {
    return oracle::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4},
                                  {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4},
                                  {6, 0}, {6, 1}});
}

Comb comb7_comb() {
    Comb cb;
    cb.shaft = {{0}, {1}};
    cb.teeth = {{2}, {3, 4}};
    cb.vp = {5};
    cb.vf = {6};
    return cb;
}

// Nested two-level trivially perfect module {0..4} under a covering vertex 5
// (its own neighborhood broken off 0 by the pendant 6): 0 covers the module,
// tooth {1}, then cell {2} over the final tooth {3,4}.
Graph module_host() {
    return oracle::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {2, 4},
                                  {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 6}});
}

} // namespace

TEST_CASE("comb accessors") {
    Comb cb = comb7_comb();
    CHECK(cb.length() == 2);
    CHECK(cb.shaft_union() == VertexSet{0, 1});
    CHECK(cb.teeth_union() == VertexSet{2, 3, 4});
    CHECK_FALSE(cb.degenerate());
    cb.teeth.push_back({});
    cb.shaft.push_back({9});
    CHECK(cb.degenerate());
}

TEST_CASE("hand-built combs validate") {
    CHECK(validate_comb(comb5(), comb5_comb()));
    CHECK(validate_comb(comb7(), comb7_comb()));
}

TEST_CASE("validation rejects every broken variant") {
    Graph g = comb7();
    SUBCASE("tooth order swapped breaks the ladder") {
        Comb cb = comb7_comb();
        std::swap(cb.teeth[0], cb.teeth[1]);
        CHECK_FALSE(validate_comb(g, cb));
    }
    SUBCASE("cell order swapped breaks the ladder") {
        Comb cb = comb7_comb();
        std::swap(cb.shaft[0], cb.shaft[1]);
        CHECK_FALSE(validate_comb(g, cb));
    }
    SUBCASE("vp and vf misassigned") {
        Comb cb = comb7_comb();
        std::swap(cb.vp, cb.vf);
        CHECK_FALSE(validate_comb(g, cb));
    }
    SUBCASE("vp dropped") {
        Comb cb = comb7_comb();
        cb.vp.clear();
        CHECK_FALSE(validate_comb(g, cb));
    }
    SUBCASE("tooth vertex moved into the wrong tooth") {
        Comb cb = comb7_comb();
        cb.teeth = {{2, 3}, {4}};
        CHECK_FALSE(validate_comb(g, cb));
    }
    SUBCASE("non-critical cell: merging both cells") {
        Comb cb = comb7_comb();
        cb.shaft = {{0, 1}};
        cb.teeth = {{2, 3, 4}};
        CHECK_FALSE(validate_comb(g, cb));
    }
    SUBCASE("adjacent teeth") {
        Graph bad = apply_edits(g, {{2, 3}});
        CHECK_FALSE(validate_comb(bad, comb7_comb()));
    }
    SUBCASE("shaft not a clique") {
        Graph bad = apply_edits(g, {{0, 1}});
        CHECK_FALSE(validate_comb(bad, comb7_comb()));
    }
}

TEST_CASE("serialization format is fixed") {
    CHECK(comb_to_string(comb7_comb()) ==
          "SHAFT 1: 0\nSHAFT 2: 1\nTOOTH 1: 2\nTOOTH 2: 3 4\nVP: 5\nVF: 6\n");
    CHECK(comb_to_string(comb5_comb()) ==
          "SHAFT 1: 0\nSHAFT 2: 1\nTOOTH 1: 2\nTOOTH 2: 3 4\nVP:\nVF:\n");
}

TEST_CASE("canonicalization recovers the comb from its two vertex sets") {
    auto c5 = canonicalize_comb(comb5(), {0, 1}, {2, 3, 4});
    REQUIRE(c5.has_value());
    CHECK(comb_to_string(*c5) == comb_to_string(comb5_comb()));
    auto c7 = canonicalize_comb(comb7(), {0, 1}, {2, 3, 4});
    REQUIRE(c7.has_value());
    CHECK(comb_to_string(*c7) == comb_to_string(comb7_comb()));
}

TEST_CASE("canonicalization rejects non-comb inputs") {
    Graph g = comb5();
    CHECK(canonicalize_comb(g, {}, {2, 3}) == std::nullopt);
    CHECK(canonicalize_comb(g, {0, 1}, {}) == std::nullopt);
    CHECK(canonicalize_comb(g, {0, 1}, {1, 2}) == std::nullopt);   // overlap
    // First cell must see all of R: swapping roles cannot work.
    CHECK(canonicalize_comb(g, {2, 3, 4}, {0, 1}) == std::nullopt);
    CHECK_THROWS_AS(canonicalize_comb(g, {1, 0}, {2}), InvalidInput);
}

TEST_CASE("ucd path comb on a path of three vertices") {
    Graph p3 = oracle::path_graph(3);
    Ucd d = build_ucd(p3);
    REQUIRE(d.roots.size() == 1);
    Comb cb = comb_from_ucd_path(p3, d, {d.roots[0]});
    REQUIRE(cb.length() == 1);
    CHECK(cb.shaft[0] == VertexSet{1});
    CHECK(cb.teeth[0] == VertexSet{0, 2});
    CHECK(cb.vp.empty());
    CHECK(validate_comb(p3, cb));
}

TEST_CASE("ucd path comb on a star keeps all leaves in one tooth") {
    Graph star = oracle::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    Ucd d = build_ucd(star);
    Comb cb = comb_from_ucd_path(star, d, {d.roots[0]});
    REQUIRE(cb.length() == 1);
    CHECK(cb.shaft[0] == VertexSet{0});
    CHECK(cb.teeth[0] == VertexSet{1, 2, 3});
    CHECK(validate_comb(star, cb));
}

TEST_CASE("ucd path comb drops a trailing leaf into the tooth above") {
    Graph star = oracle::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    Ucd d = build_ucd(star);
    int leaf = d.nodes[d.roots[0]].children.front();
    Comb via_leaf = comb_from_ucd_path(star, d, {d.roots[0], leaf});
    Comb via_root = comb_from_ucd_path(star, d, {d.roots[0]});
    CHECK(comb_to_string(via_leaf) == comb_to_string(via_root));
}

TEST_CASE("ucd path comb rejects bad paths") {
    Graph k5 = oracle::complete_graph(5);
    Ucd kd = build_ucd(k5);
    // A single clique bag has no teeth to give.
    CHECK_THROWS_AS(comb_from_ucd_path(k5, kd, {kd.roots[0]}), InvalidInput);
    CHECK_THROWS_AS(comb_from_ucd_path(k5, kd, {}), InvalidInput);
    CHECK_THROWS_AS(comb_from_ucd_path(k5, kd, {7}), InvalidInput);
    Graph star = oracle::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    Ucd sd = build_ucd(star);
    int leaf = sd.nodes[sd.roots[0]].children.front();
    // Bottom-up order is not a chain.
    CHECK_THROWS_AS(comb_from_ucd_path(star, sd, {leaf, sd.roots[0]}), InvalidInput);
}

TEST_CASE("vp collects ancestor bags of the path start") {
    Graph host = module_host();
    Ucd hd = build_ucd(host);
    REQUIRE(hd.roots.size() == 1);
    int hroot = hd.roots[0];
    REQUIRE(hd.nodes[hroot].bag == VertexSet{5});
    // The child node holding vertex 0 covers the module component.
    int child = -1;
    for (int c : hd.nodes[hroot].children)
        if (vs_contains(hd.nodes[c].bag, 0)) child = c;
    REQUIRE(child >= 0);
    Comb cb = comb_from_ucd_path(host, hd, {child});
    CHECK(cb.vp == VertexSet{5});
    CHECK(validate_comb(host, cb));
}

TEST_CASE("small-anti-matching comb covers connected TP graphs") {
    tpe::Rng rng(11);
    for (int round = 0; round < 200; ++round) {
        Graph g = oracle::random_tp_graph(rng, 3 + static_cast<int>(rng.below(80)));
        auto comps = connected_components(g);
        if (comps.size() != 1) {
            InducedSubgraph sub = induced_subgraph(g, comps[0]);
            g = sub.graph;
        }
        if (g.vertex_count() < 2) continue;
        Comb cb = build_comb_small_antimatching(g);
        CAPTURE(round);
        // Shaft and teeth partition V.
        REQUIRE(vs_union(cb.shaft_union(), cb.teeth_union()) == all_vertices(g));
        REQUIRE(vs_disjoint(cb.shaft_union(), cb.teeth_union()));
        CHECK(cb.vp.empty());
        CHECK(cb.vf.empty());
        // |R| <= 4 alpha.
        int alpha = static_cast<int>(max_anti_matching(g, all_vertices(g)).size());
        REQUIRE(static_cast<int>(cb.teeth_union().size()) <= 4 * alpha);
        if (!cb.degenerate()) REQUIRE(validate_comb(g, cb));
    }
}

TEST_CASE("small-anti-matching comb on a clique degenerates") {
    Comb cb = build_comb_small_antimatching(oracle::complete_graph(5));
    CHECK(cb.degenerate());
    CHECK(cb.shaft_union() == VertexSet{0, 1, 2, 3, 4});
    CHECK(cb.teeth_union().empty());
    Comb folded = build_comb_small_antimatching(oracle::complete_graph(5), true);
    CHECK(folded.degenerate());
}

TEST_CASE("small-anti-matching comb rejects bad inputs") {
    CHECK_THROWS_AS(build_comb_small_antimatching(oracle::path_graph(4)), InvalidInput);
    Graph two = oracle::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(build_comb_small_antimatching(two), InvalidInput);
    Graph p3 = oracle::path_graph(3);
    CHECK_THROWS_AS(build_comb_small_antimatching(p3, false, -1), InvalidInput);
}

TEST_CASE("folding stops at a clique tail") {
    // Star of cliques: 0 over {1} and the triangle {2,3,4}; threshold 1.
    Graph g = oracle::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                     {2, 3}, {2, 4}, {3, 4}});
    Comb plain = build_comb_small_antimatching(g, false, 1);
    // Unfolded: descends into the triangle, peels it entirely, empty tail.
    CHECK(plain.degenerate());
    Comb folded = build_comb_small_antimatching(g, true, 1);
    REQUIRE(folded.length() == 1);
    CHECK(folded.shaft[0] == VertexSet{0});
    CHECK(folded.teeth[0] == VertexSet{1, 2, 3, 4});
    CHECK_FALSE(folded.degenerate());
}

TEST_CASE("enumeration on prime graphs and cliques is empty") {
    CHECK(enumerate_reducible_combs(oracle::path_graph(4), 1).empty());
    CHECK(enumerate_reducible_combs(oracle::cycle_graph(5), 1).empty());
    CHECK(enumerate_reducible_combs(oracle::complete_graph(6), 1).empty());
}

TEST_CASE("enumeration finds the comb inside a covered TP module") {
    Graph g = module_host();
    auto combs = enumerate_reducible_combs(g, 1);
    REQUIRE(!combs.empty());
    std::string want =
        "SHAFT 1: 0\nSHAFT 2: 2\nTOOTH 1: 1\nTOOTH 2: 3 4\nVP: 5\nVF:\n";
    bool found = false;
    for (const Comb& cb : combs) {
        CHECK(validate_comb(g, cb));
        CHECK(cb.length() >= 2);
        if (comb_to_string(cb) == want) found = true;
    }
    CHECK(found);
}

TEST_CASE("enumeration deduplicates and validates everything it returns") {
    tpe::Rng rng(17);
    for (int round = 0; round < 60; ++round) {
        GenSpec spec;
        spec.seed = rng.below(1'000'000);
        spec.n = 10 + static_cast<int>(rng.below(40));
        spec.edits = static_cast<int>(rng.below(3));
        spec.mode = EditMode::editing;
        Graph g = plant_instance(spec).instance.graph;
        auto combs = enumerate_reducible_combs(g, 2);
        std::set<std::string> keys;
        for (const Comb& cb : combs) {
            CAPTURE(round);
            REQUIRE(validate_comb(g, cb));
            REQUIRE(cb.length() >= 2);
            REQUIRE(keys.insert(comb_to_string(cb)).second);
        }
    }
}
