#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpe/instance_gen.hpp"

namespace tpe {

// One kernelization run per (seed, n, k) triple; k is also the planted edit
// count. times=false omits the wall-time column so reruns are byte-identical.
struct BenchConfig {
    std::vector<std::uint64_t> seeds;
    std::vector<int> sizes;
    std::vector<int> ks;
    EditMode mode = EditMode::editing;
    bool times = false;
};

struct BenchRow {
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    int n_after = 0;
    long long rules_fired = 0;
    long long violations = 0;
    double millis = 0.0;
};

// Plants, reduces to a fixed point, and audits every configured triple.
// Rows come back sorted by (seed, n, k); the violations column must be zero.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

// CSV: header line, then one row per instance in the given order.
std::string bench_table(const std::vector<BenchRow>& rows, bool times);

} // namespace tpe
