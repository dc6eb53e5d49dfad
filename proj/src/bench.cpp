#include "tpe/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <tuple>

#include "tpe/kernel.hpp"

namespace tpe {

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    for (std::uint64_t seed : cfg.seeds) {
        for (int n : cfg.sizes) {
            for (int k : cfg.ks) {
                GenSpec spec;
                spec.seed = seed;
                spec.n = n;
                spec.edits = k;
                spec.mode = cfg.mode;
                PlantedInstance planted = plant_instance(spec);

                auto start = std::chrono::steady_clock::now();
                ReductionTrace trace = reduce_exhaustively(planted.instance);
                auto stop = std::chrono::steady_clock::now();

                BenchRow row;
                row.seed = seed;
                row.n = planted.instance.graph.vertex_count();
                row.k = k;
                row.n_after = trace.final_instance.graph.vertex_count();
                row.rules_fired = static_cast<long long>(trace.steps.size());
                row.violations = static_cast<long long>(
                    audit_bounds(trace.final_instance).violations.size());
                row.millis =
                    std::chrono::duration<double, std::milli>(stop - start).count();
                rows.push_back(row);
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.seed, a.n, a.k) < std::tie(b.seed, b.n, b.k);
    });
    return rows;
}

std::string bench_table(const std::vector<BenchRow>& rows, bool times) {
    std::ostringstream out;
    out << "seed,n,k,n_kernel,rules,violations";
    if (times) out << ",ms";
    out << "\n";
    for (const BenchRow& r : rows) {
        out << r.seed << "," << r.n << "," << r.k << "," << r.n_after << ","
            << r.rules_fired << "," << r.violations;
        if (times) out << "," << std::fixed << std::setprecision(3) << r.millis;
        out << "\n";
    }
    return out.str();
}

} // namespace tpe
