#include "tpe/instance_gen.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace tpe {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InvalidInput("Rng::below: bound must be positive");
    // Rejection keeps the distribution exactly uniform and the draw sequence
    // identical across platforms.
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = eng_();
    while (r >= limit) r = eng_();
    return r % bound;
}

int Rng::range(int lo, int hi) {
    if (lo > hi) throw InvalidInput("Rng::range: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

void check_spec(const GenSpec& spec) {
    if (spec.n < 0) throw InvalidInput("gen: n must be nonnegative");
    if (spec.bag_min < 1 || spec.bag_min > spec.bag_max)
        throw InvalidInput("gen: bag size range must satisfy 1 <= min <= max");
    if (spec.branch_min < 0 || spec.branch_min > spec.branch_max)
        throw InvalidInput("gen: branching range must satisfy 0 <= min <= max");
    if (spec.edits < 0) throw InvalidInput("gen: edits must be nonnegative");
}

// Breadth-first growth of the clique tree. Each queue entry is the vertex
// set of the pending node's ancestor bags. The last bag is clipped so the
// vertex count lands exactly on n (when branching keeps the frontier alive).
Graph grow_tree(const GenSpec& spec, Rng& rng) {
    GraphBuilder b(spec.n);
    std::deque<VertexSet> frontier;
    frontier.push_back({});
    int made = 0;
    while (made < spec.n && !frontier.empty()) {
        VertexSet ancestors = std::move(frontier.front());
        frontier.pop_front();
        int want = rng.range(spec.bag_min, spec.bag_max);
        int size = std::min(want, spec.n - made);
        VertexSet bag;
        for (int i = 0; i < size; ++i) bag.push_back(made + i);
        made += size;
        for (int i = 0; i < size; ++i) {
            for (int j = i + 1; j < size; ++j) b.add_edge(bag[i], bag[j]);
            for (Vertex a : ancestors) b.add_edge(a, bag[i]);
        }
        int children = rng.range(spec.branch_min, spec.branch_max);
        if (children > 0) {
            VertexSet down = vs_union(ancestors, bag);
            for (int c = 0; c < children; ++c) frontier.push_back(down);
        }
    }
    return b.build();
}

} // namespace

Graph gen_tp_graph(const GenSpec& spec) {
    check_spec(spec);
    Rng rng(spec.seed);
    return grow_tree(spec, rng);
}

PlantedInstance plant_instance(const GenSpec& spec) {
    check_spec(spec);
    Rng rng(spec.seed);
    Graph base = grow_tree(spec, rng);
    int n = base.vertex_count();

    long long all_pairs = static_cast<long long>(n) * (n - 1) / 2;
    long long eligible = all_pairs;
    if (spec.mode == EditMode::deletion) eligible = all_pairs - base.edge_count();
    if (spec.mode == EditMode::completion) eligible = base.edge_count();
    if (spec.edits > eligible)
        throw InvalidInput("plant: not enough mode-eligible pairs");

    // Rejection draws without replacement. Eligibility is judged against the
    // base graph: deletion-mode plants additions, completion-mode deletions.
    EditSet planted;
    while (static_cast<int>(planted.size()) < spec.edits) {
        Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        VertexPair p{u, v};
        bool present = base.is_edge(p.u, p.v);
        if (spec.mode == EditMode::deletion && present) continue;
        if (spec.mode == EditMode::completion && !present) continue;
        if (std::find(planted.begin(), planted.end(), p) != planted.end()) continue;
        planted.push_back(p);
    }
    std::sort(planted.begin(), planted.end());

    PlantedInstance out;
    out.instance.graph = apply_edits(base, planted);
    out.instance.k = spec.edits;
    out.instance.mode = spec.mode;
    out.planted = std::move(planted);
    return out;
}

} // namespace tpe
