#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tpe/bench.hpp"
#include "tpe/io.hpp"
#include "tpe/recognition.hpp"
#include "tpe/solver.hpp"

namespace {

// Exit codes shared by every subcommand: 0 success / TP / yes / AGREE,
// 1 negative decision, 2 input error, 3 refused by the verify size cap.
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitRefused = 3;

tpe::EdgeListFile read_input(const std::string& path) {
    if (path == "-") return tpe::read_edge_list(std::cin);
    return tpe::read_edge_list_file(path);
}

tpe::EditMode parse_mode(const std::string& name) {
    auto m = tpe::edit_mode_from_name(name);
    if (!m) throw tpe::ParseError("unknown mode: " + name);
    return *m;
}

// Flag overrides the file header; k must come from one of them.
int resolve_k(const tpe::EdgeListFile& file, int flag_k) {
    if (flag_k >= 0) return flag_k;
    if (file.k >= 0) return file.k;
    throw tpe::ParseError("no parameter k: pass --k or an 'n m k' header with k >= 0");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw tpe::ParseError("cannot open for writing: " + path);
    out << text;
}

void print_obstruction(const tpe::Obstruction& obs) {
    std::cout << "NOT-TP "
              << (obs.kind == tpe::ObstructionKind::C4 ? "C4" : "P4");
    for (tpe::Vertex v : obs.vertices) std::cout << " " << v;
    std::cout << "\n";
}

int cmd_recognize(const std::string& input) {
    tpe::Graph g = read_input(input).graph;
    auto obs = tpe::find_obstruction(g);
    if (!obs) {
        std::cout << "TP\n";
        return 0;
    }
    print_obstruction(*obs);
    return kExitNegative;
}

int cmd_decompose(const std::string& input) {
    tpe::Graph g = read_input(input).graph;
    try {
        std::cout << tpe::ucd_to_string(tpe::build_ucd(g));
        return 0;
    } catch (const tpe::NotTriviallyPerfect& e) {
        print_obstruction(e.obstruction);
        return kExitNegative;
    }
}

int cmd_kernelize(const std::string& input, int flag_k, const std::string& mode,
                  const std::string& out_path, const std::string& trace_path) {
    tpe::EdgeListFile file = read_input(input);
    tpe::Instance inst;
    inst.graph = file.graph;
    inst.k = resolve_k(file, flag_k);
    inst.mode = parse_mode(mode);

    tpe::ReductionTrace trace = tpe::reduce_exhaustively(inst);
    const tpe::Instance& fin = trace.final_instance;

    std::vector<std::string> comments;
    comments.push_back("mode: " + tpe::edit_mode_name(fin.mode));
    std::ostringstream ids;
    ids << "original-ids:";
    for (tpe::Vertex v : tpe::trace_original_ids(trace)) ids << " " << v;
    comments.push_back(ids.str());

    write_text(out_path, tpe::edge_list_to_string(fin.graph, fin.k, comments));
    if (!trace_path.empty()) write_text(trace_path, tpe::trace_to_string(trace));

    std::cout << inst.graph.vertex_count() << " " << fin.graph.vertex_count()
              << " " << fin.k << " " << trace.steps.size() << "\n";
    return 0;
}

int cmd_solve(const std::string& input, int flag_k, const std::string& mode) {
    tpe::EdgeListFile file = read_input(input);
    tpe::Instance inst;
    inst.graph = file.graph;
    inst.k = resolve_k(file, flag_k);
    inst.mode = parse_mode(mode);

    tpe::SolveResult res = tpe::solve(inst);
    if (!res.yes) {
        std::cout << "NO\n";
        return kExitNegative;
    }
    std::cout << "YES\n";
    for (const tpe::VertexPair& p : res.witness)
        std::cout << (inst.graph.is_edge(p.u, p.v) ? "-" : "+") << p.u << " "
                  << p.v << "\n";
    return 0;
}

int cmd_gen(const tpe::GenSpec& spec, const std::string& out_path) {
    tpe::PlantedInstance planted = tpe::plant_instance(spec);
    std::vector<std::string> comments;
    std::ostringstream head;
    head << "generated: seed=" << spec.seed << " n=" << spec.n
         << " edits=" << spec.edits << " mode=" << tpe::edit_mode_name(spec.mode);
    comments.push_back(head.str());
    comments.push_back("k equals the planted edit count; the optimum may be smaller");
    for (const tpe::VertexPair& p : planted.planted) {
        std::ostringstream line;
        line << "planted: " << p.u << " " << p.v;
        comments.push_back(line.str());
    }
    write_text(out_path,
               tpe::edge_list_to_string(planted.instance.graph,
                                        planted.instance.k, comments));
    return 0;
}

int cmd_verify(const std::string& original, const std::string& kernel, int flag_k,
               const std::string& mode, int cap) {
    tpe::EdgeListFile of = read_input(original);
    tpe::EdgeListFile kf = read_input(kernel);
    if (of.graph.vertex_count() > cap || kf.graph.vertex_count() > cap) {
        std::cerr << "refused: instance exceeds the verify cap of " << cap
                  << " vertices (the oracle is exponential; raise --cap to force)\n";
        return kExitRefused;
    }
    tpe::EditMode m = parse_mode(mode);
    tpe::Instance a;
    a.graph = of.graph;
    a.k = resolve_k(of, flag_k);
    a.mode = m;
    tpe::Instance b;
    b.graph = kf.graph;
    b.k = kf.k >= 0 ? kf.k : a.k;
    b.mode = m;
    bool agree = tpe::solve(a).yes == tpe::solve(b).yes;
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? 0 : kExitNegative;
}

int cmd_bench(const tpe::BenchConfig& cfg, const std::string& out_path) {
    std::vector<tpe::BenchRow> rows = tpe::run_bench(cfg);
    write_text(out_path, tpe::bench_table(rows, cfg.times));
    for (const tpe::BenchRow& r : rows)
        if (r.violations != 0) return kExitNegative;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trivially perfect editing toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string mode = "editing";
    std::string out_path;
    std::string trace_path;
    int flag_k = -1;

    auto* recognize = app.add_subcommand(
        "recognize", "print TP, or NOT-TP with a C4/P4 obstruction");
    recognize->add_option("input", input, "edge-list file, - for stdin");

    auto* decompose = app.add_subcommand(
        "decompose", "print the universal clique decomposition forest");
    decompose->add_option("input", input, "edge-list file, - for stdin");

    auto* kernelize =
        app.add_subcommand("kernelize", "reduce an instance to a fixed point");
    kernelize->add_option("input", input, "edge-list file, - for stdin");
    kernelize->add_option("--k", flag_k, "edit budget (overrides the file header)");
    kernelize->add_option("--mode", mode, "editing|deletion|completion");
    kernelize->add_option("--out", out_path, "kernel output path");
    kernelize->add_option("--trace", trace_path, "reduction trace output path");

    auto* solve = app.add_subcommand("solve", "decide the instance exactly");
    solve->add_option("input", input, "edge-list file, - for stdin");
    solve->add_option("--k", flag_k, "edit budget (overrides the file header)");
    solve->add_option("--mode", mode, "editing|deletion|completion");

    tpe::GenSpec spec;
    auto* gen = app.add_subcommand("gen", "generate a planted instance");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->add_option("--n", spec.n, "vertex count")->required();
    gen->add_option("--edits", spec.edits, "planted toggle count (k)");
    gen->add_option("--mode", mode, "editing|deletion|completion");
    gen->add_option("--branch-min", spec.branch_min, "min children per tree node");
    gen->add_option("--branch-max", spec.branch_max, "max children per tree node");
    gen->add_option("--bag-min", spec.bag_min, "min bag size");
    gen->add_option("--bag-max", spec.bag_max, "max bag size");
    gen->add_option("--out", out_path, "output path (default stdout)");

    std::string kernel_path;
    int cap = 12;
    auto* verify = app.add_subcommand(
        "verify", "check that an instance and its kernel decide alike");
    verify->add_option("original", input, "original instance file")->required();
    verify->add_option("kernel", kernel_path, "kernel instance file")->required();
    verify->add_option("--k", flag_k, "edit budget for the original");
    verify->add_option("--mode", mode, "editing|deletion|completion");
    verify->add_option("--cap", cap, "max vertices the oracle will accept");

    tpe::BenchConfig cfg;
    cfg.seeds = {1, 2, 3, 4, 5};
    cfg.sizes = {50, 100, 200};
    cfg.ks = {2, 4};
    auto* bench = app.add_subcommand(
        "bench", "kernelize planted sweeps and report sizes plus audits");
    bench->add_option("--seeds", cfg.seeds, "seed list")->delimiter(',');
    bench->add_option("--sizes", cfg.sizes, "vertex counts")->delimiter(',');
    bench->add_option("--ks", cfg.ks, "edit budgets")->delimiter(',');
    bench->add_option("--mode", mode, "editing|deletion|completion");
    bench->add_flag("--times", cfg.times,
                    "append a wall-time column (breaks rerun byte-identity)");
    bench->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (app.got_subcommand(recognize)) return cmd_recognize(input);
        if (app.got_subcommand(decompose)) return cmd_decompose(input);
        if (app.got_subcommand(kernelize))
            return cmd_kernelize(input, flag_k, mode, out_path, trace_path);
        if (app.got_subcommand(solve)) return cmd_solve(input, flag_k, mode);
        if (app.got_subcommand(gen)) {
            spec.mode = parse_mode(mode);
            return cmd_gen(spec, out_path);
        }
        if (app.got_subcommand(verify))
            return cmd_verify(input, kernel_path, flag_k, mode, cap);
        if (app.got_subcommand(bench)) {
            cfg.mode = parse_mode(mode);
            return cmd_bench(cfg, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
