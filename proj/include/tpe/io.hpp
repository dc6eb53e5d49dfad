#pragma once

#include <iosfwd>
#include <string>

#include "tpe/graph.hpp"

namespace tpe {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list file: first non-comment line "n m k", then m lines "u v" with
// 0 <= u < v < n. Lines starting with '#' are comments. k = -1 means the
// instance carries no parameter.
struct EdgeListFile {
    Graph graph;
    int k = -1;
};

EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g, int k,
                     const std::vector<std::string>& comments = {});
std::string edge_list_to_string(const Graph& g, int k,
                                const std::vector<std::string>& comments = {});

} // namespace tpe
