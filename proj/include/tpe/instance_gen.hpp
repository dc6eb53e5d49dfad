#pragma once

#include <cstdint>
#include <random>

#include "tpe/kernel.hpp"

namespace tpe {

// Seeded generation parameters. The base graph is grown as a random rooted
// tree of cliques: each node carries a bag of bag_min..bag_max vertices and
// spawns branch_min..branch_max children, breadth-first, until n vertices
// exist. Every vertex is adjacent to its bag and to all ancestor bags.
struct GenSpec {
    std::uint64_t seed = 0;
    int n = 0;
    int branch_min = 2;
    int branch_max = 4;
    int bag_min = 1;
    int bag_max = 4;
    int edits = 0;
    EditMode mode = EditMode::editing;
};

// Deterministic portable RNG: the standard mt19937_64 stream narrowed by
// rejection sampling, so identical seeds give identical draws everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t bound);     // uniform in [0, bound)
    int range(int lo, int hi);                    // uniform in [lo, hi]

  private:
    std::mt19937_64 eng_;
};

// Always trivially perfect; same spec gives the identical graph.
Graph gen_tp_graph(const GenSpec& spec);

struct PlantedInstance {
    Instance instance;
    // Toggles applied to the base TP graph; re-toggling them restores it, so
    // the instance is a yes-instance at k = |planted| (the optimum may be
    // smaller).
    EditSet planted;
};

// Plants `edits` distinct toggles the mode can undo: editing toggles any
// pair, deletion plants additions, completion plants deletions. Throws
// InvalidInput when the base graph has too few eligible pairs.
PlantedInstance plant_instance(const GenSpec& spec);

} // namespace tpe
