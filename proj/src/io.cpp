#include "tpe/io.hpp"

#include <fstream>
#include <sstream>

namespace tpe {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

EdgeListFile read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("missing header line");
    long long n, m, k;
    {
        std::istringstream h(line);
        if (!(h >> n >> m >> k)) throw ParseError("bad header, expected: n m k");
        std::string extra;
        if (h >> extra) throw ParseError("trailing tokens in header");
    }
    if (n < 0 || m < 0) throw ParseError("negative n or m");
    if (k < -1) throw ParseError("k must be >= 0, or -1 for none");
    if (n > 10'000'000) throw ParseError("n too large");

    GraphBuilder b(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line)) throw ParseError("fewer edge lines than m");
        std::istringstream e(line);
        long long u, v;
        if (!(e >> u >> v)) throw ParseError("bad edge line: " + line);
        std::string extra;
        if (e >> extra) throw ParseError("trailing tokens in edge line: " + line);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range: " + line);
        if (u >= v) throw ParseError("edges must satisfy u < v: " + line);
        try {
            b.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const InvalidInput& err) {
            throw ParseError(std::string(err.what()) + ": " + line);
        }
    }
    if (next_data_line(in, line)) throw ParseError("more edge lines than m");

    EdgeListFile out;
    out.graph = b.build();
    out.k = static_cast<int>(k);
    return out;
}

EdgeListFile read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, int k,
                     const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << " " << k << "\n";
    for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
}

std::string edge_list_to_string(const Graph& g, int k,
                                const std::vector<std::string>& comments) {
    std::ostringstream ss;
    write_edge_list(ss, g, k, comments);
    return ss.str();
}

} // namespace tpe
