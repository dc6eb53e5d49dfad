#pragma once

#include <optional>

#include "tpe/recognition.hpp"

namespace tpe {

// A comb (C, R): the shaft C is a clique split into critical cliques
// C_1..C_l, the teeth R_1..R_l are nonempty pairwise non-adjacent trivially
// perfect modules, tooth R_i is adjacent to exactly C_1..C_i and cell C_i
// sees exactly R_i..R_l inside R. Outside C and R, shaft vertices see
// exactly vp and vf, tooth vertices exactly vp.
//
// shaft and teeth always have equal length; builders may return a trailing
// empty tooth (degenerate), which validate_comb rejects.
struct Comb {
    std::vector<VertexSet> shaft;
    std::vector<VertexSet> teeth;
    VertexSet vp;
    VertexSet vf;

    int length() const { return static_cast<int>(shaft.size()); }
    VertexSet shaft_union() const;
    VertexSet teeth_union() const;
    bool degenerate() const;
};

// Literal check of the comb definition against g.
bool validate_comb(const Graph& g, const Comb& cb);

// Comb along a top-down path of UCD nodes: shaft cells are the path bags,
// tooth i collects the subtrees hanging off path node i, vp is everything
// strictly above the path. A trailing leaf node is dropped (its tooth would
// be empty); a path reduced to nothing is an error.
Comb comb_from_ucd_path(const Graph& g, const Ucd& d, const std::vector<int>& path);

// Comb covering a connected trivially perfect graph with a small tooth set:
// peels universal cliques, following the unique component larger than the
// threshold (default: the anti-matching number alpha) and collecting the
// rest as teeth. Guarantees V = C + R and |R| <= 3*alpha + threshold
// (= 4*alpha at the default). The result can end in an empty tooth when the
// peeling terminates inside a clique; with fold_clique_tail the construction
// stops one level earlier and folds that clique into the last tooth, which
// keeps the comb valid at the price of |R| <= 2*alpha + threshold + |clique|.
Comb build_comb_small_antimatching(const Graph& g, bool fold_clique_tail = false,
                                   std::optional<int> threshold = std::nullopt);

// Recomputes the ordered cell partitions and vp/vf from the two sets alone.
// For a valid comb this reproduces the stored structure (the decomposition
// of a comb into cells is unique). Returns nullopt when the sets do not
// split consistently.
std::optional<Comb> canonicalize_comb(const Graph& g, const VertexSet& c, const VertexSet& r);

// Polynomial best-effort comb search used by the shaft/teeth rules: combs
// found inside trivially perfect strong modules (UCD root-to-leaf paths and
// the small-anti-matching construction) plus combs grown from chains of
// critical cliques with nested neighborhoods. Every returned comb passes
// validate_comb; the list is deterministic and duplicate-free.
std::vector<Comb> enumerate_reducible_combs(const Graph& g, int k);

std::string comb_to_string(const Comb& cb);

} // namespace tpe
