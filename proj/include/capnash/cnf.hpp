#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "capnash/graph.hpp"

namespace capnash {

// CNF formula over variables 1..variable_count; literals are signed
// variable indices as in DIMACS.
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;
    int clause_width = 0;  // common clause width, 0 when clauses differ or none

    void recompute_width();
};

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment;  // index var-1, meaningful when satisfiable
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
CnfFormula read_dimacs_file(const std::string& path);

// Brute-force satisfiability over at most 24 variables. exists-mode needs one
// true literal per clause; threshold-mode needs at least min_true_literals
// true literal occurrences in every clause. Assignments are tried in numeric
// order, so the reported witness is deterministic.
SatResult sat_oracle_exists(const CnfFormula& f);
SatResult sat_oracle_threshold(const CnfFormula& f, int min_true_literals);

bool assignment_satisfies(const CnfFormula& f, const std::vector<bool>& assignment,
                          int min_true_literals, int* failing_clause = nullptr);

// 3-SAT to k-out-of-(k+2)-SAT: appends k-1 fresh variables as positive
// literals to every clause. Requires width-3 clauses and k >= 3.
CnfFormula widen_to_k_of_k2(const CnfFormula& f, int k);

// Makes the variable count even by adding three fresh variables and one
// clause over them; identity when the count is already even. Requires
// width-3 clauses.
CnfFormula pad_even_variables(const CnfFormula& f);

}  // namespace capnash
