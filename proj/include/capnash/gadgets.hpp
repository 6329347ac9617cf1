#pragma once

#include <string>
#include <utility>
#include <vector>

#include "capnash/cnf.hpp"
#include "capnash/graph.hpp"

namespace capnash {

// A reduction graph plus the bookkeeping needed to rebuild assignments and
// witnesses: variable -> (w, wbar) ids, clause -> clause-vertex id, a region
// label per vertex, and the formula actually encoded (after padding or
// widening).
struct GadgetArtifact {
    CapacitatedGraph graph;
    int k = 0;
    std::vector<std::pair<int, int>> var_vertices;
    std::vector<int> clause_vertices;
    std::vector<std::string> region;
    CnfFormula padded_formula;
};

// k = 2 reduction from 3-SAT. Variable pairs form a 3-regular ring that is
// then subdivided; guard stars, a two-vertex hub and clause vertices complete
// the graph. Every capacity is 2. The input must be width-3 with distinct
// variables per clause; the variable count is padded to even internally.
GadgetArtifact gadget_k2(const CnfFormula& f);

// k >= 3 reduction via k-out-of-(k+2)-SAT (widening applied internally).
// Every capacity is k.
GadgetArtifact gadget_k(const CnfFormula& f, int k);

// Nash subgraph with a D-set different from the canonical X u Z one, built
// from a satisfying assignment of the artifact's encoded formula (>= 1 true
// literal per clause for k = 2, >= k for k >= 3). Rejects assignments that
// do not satisfy, naming the failing clause.
NashSubgraph assignment_witness(const GadgetArtifact& a, const std::vector<bool>& assignment);

// Sidecar mapping: `var <i> <w-id> <wbar-id>`, `clause <j> <c-id>`,
// `region <id> <label>`; variable and clause indices are 1-based as in
// DIMACS.
std::string write_mapping_text(const GadgetArtifact& a);

}  // namespace capnash
