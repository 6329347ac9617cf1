#pragma once

#include <optional>
#include <vector>

#include "capnash/graph.hpp"

namespace capnash {

struct DSetReport {
    std::vector<std::vector<int>> dsets;  // lexicographically sorted
    bool complete = true;                 // false when truncated by limit or budget
    unsigned long long explored = 0;      // candidate assignments examined
};

// Exhaustive O*(2^n) scan: every subset is tested with the is_dset flow
// check, in lexicographic order of the sorted vertex lists. With a limit the
// report holds the first `limit` D-sets and says whether more exist. Throws
// BudgetExceeded when n exceeds vertex_cap. jobs > 1 shards the scan by
// first element; the report is identical regardless (jobs is ignored when a
// limit is set so early exit stays deterministic).
DSetReport enumerate_dsets(const CapacitatedGraph& g,
                           std::optional<unsigned long long> limit = std::nullopt,
                           int vertex_cap = 24, int jobs = 1);

// Backtracking over D/P labels with two propagation rules, both direct
// consequences of the Nash conditions: a P-vertex whose neighbours are all P
// is dead, and a D-vertex with fewer than min(d, kappa) non-D neighbours is
// dead. Leaves are confirmed with is_dset, so the output matches the
// exhaustive scan wherever both complete. Stops at the wall-clock budget and
// reports complete=false.
DSetReport enumerate_dsets_pruned(const CapacitatedGraph& g, double timeout_seconds);

unsigned long long count_dsets(const CapacitatedGraph& g, int vertex_cap = 24);

}  // namespace capnash
