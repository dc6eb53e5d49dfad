#pragma once

#include "tpe/comb.hpp"

namespace tpe {

enum class EditMode { editing, deletion, completion };

std::string edit_mode_name(EditMode mode);
std::optional<EditMode> edit_mode_from_name(const std::string& name);

struct Instance {
    Graph graph;
    int k = 0;
    EditMode mode = EditMode::editing;
};

// One vertex-removing rule application. removed and map use the vertex ids of
// the instance the rule ran on: map[v] is v's id afterwards, -1 when removed.
struct ReductionStep {
    int rule = 0;
    std::string target;
    VertexSet removed;
    std::vector<Vertex> map;
};

struct RuleResult {
    bool applied = false;
    Instance inst; // the reduced instance; equals the input when !applied
    ReductionStep step;
};

// Reduction rules. Each returns applied=false when its precondition fails or
// nothing would be removed; k and mode pass through untouched. Rules given a
// target (module, comb) throw InvalidInput when the target is not what the
// rule expects.

// Removes every connected component that induces a trivially perfect graph.
RuleResult rule1_remove_tp_components(const Instance& inst);

// Trims every critical clique to k+1 vertices, dropping the largest ids.
RuleResult rule2_trim_critical_cliques(const Instance& inst);

// m must be a trivially perfect module. If g[m] has an anti-matching of k+1
// pairs, keeps exactly the 2(k+1) vertices of the first k+1 pairs found.
RuleResult rule3_antimatching_module(const Instance& inst, const VertexSet& m);

// cb must pass validate_comb. Removes the shaft cells between a (2k+1)-
// packing of (C_1..C_l) and one of (C_l..C_1) when the two share no cell.
RuleResult rule4_shaft(const Instance& inst, const Comb& cb);

// cb must pass validate_comb. Removes the teeth strictly between a (2k+1)-
// packing R_a of (R_1..R_l) and a (2k+1)-packing R_b of (R_{q-1}..R_1),
// where R_c = {R_l..R_q} is a (2k+1)-packing of (R_l..R_1) and the three
// packings are pairwise disjoint.
RuleResult rule5_teeth(const Instance& inst, const Comb& cb);

// Reduction history. Step vertex ids are ids of the ORIGINAL instance; each
// step's map sends original ids to ids after that step (cumulative), so
// replaying the removals on the original instance gives final_instance.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Instance final_instance;
};

// Applies rules to a fixed point, restarting after every application:
// rule 1, rule 2, rule 3 over trivially perfect strong modules (largest
// first), rule 4 on the peeling comb of any such module with more than
// 11k+2 vertices, then rules 4-5 over the enumerated combs. Each
// application removes at least one vertex, so at most n applications occur.
ReductionTrace reduce_exhaustively(const Instance& inst);

// original id of each final-instance vertex; identity when no step applied
std::vector<Vertex> trace_original_ids(const ReductionTrace& t);

// One line per step: RULE<id> removed={v,...} map=[old->new,...]
std::string trace_to_string(const ReductionTrace& t);

struct AuditReport {
    std::vector<std::string> violations;
    bool clean() const { return violations.empty(); }
};

// Size bounds that hold after exhaustive reduction: every critical clique
// has at most k+1 vertices, every trivially perfect strong module at most
// 11k+2, and every enumerated comb satisfies |C| <= 6k+2 and
// |C u R| <= 45k+8.
AuditReport audit_bounds(const Instance& inst);

} // namespace tpe
