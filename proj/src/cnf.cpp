#include "capnash/cnf.hpp"

#include <fstream>
#include <sstream>

#include "capnash/io.hpp"

namespace capnash {

void CnfFormula::recompute_width() {
    clause_width = 0;
    for (const auto& c : clauses) {
        int w = static_cast<int>(c.size());
        if (clause_width == 0)
            clause_width = w;
        else if (clause_width != w) {
            clause_width = 0;
            return;
        }
    }
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    int line_no = 0;
    long long nclauses = -1;
    std::string line;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;
        if (first == "c" || first[0] == 'c' || first == "%") continue;
        if (first == "p") {
            if (nclauses >= 0) throw ParseError(line_no, "duplicate DIMACS header");
            std::string fmt;
            long long nv = -1, nc = -1;
            if (!(ss >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
                throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
            f.variable_count = static_cast<int>(nv);
            nclauses = nc;
            continue;
        }
        if (nclauses < 0) throw ParseError(line_no, "clause before DIMACS header");
        ss.clear();
        ss.str(line);
        long long lit;
        while (ss >> lit) {
            if (lit == 0) {
                if (current.empty()) throw ParseError(line_no, "empty clause");
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                long long v = lit < 0 ? -lit : lit;
                if (v > f.variable_count)
                    throw ParseError(line_no, "literal " + std::to_string(lit) + " out of range");
                current.push_back(static_cast<int>(lit));
            }
        }
        if (!ss.eof()) throw ParseError(line_no, "malformed literal");
    }
    if (!current.empty()) throw ParseError(line_no, "clause not terminated by 0");
    if (static_cast<long long>(f.clauses.size()) != nclauses)
        throw ParseError(line_no, "clause count does not match header");
    f.recompute_width();
    return f;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CNF file: " + path);
    return parse_dimacs(in);
}

bool assignment_satisfies(const CnfFormula& f, const std::vector<bool>& assignment,
                          int min_true_literals, int* failing_clause) {
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        int hits = 0;
        for (int lit : f.clauses[j]) {
            int v = lit > 0 ? lit : -lit;
            bool val = assignment[v - 1];
            if ((lit > 0) == val) ++hits;
        }
        if (hits < min_true_literals) {
            if (failing_clause) *failing_clause = static_cast<int>(j);
            return false;
        }
    }
    return true;
}

namespace {

SatResult brute_force(const CnfFormula& f, int min_true_literals) {
    if (f.variable_count > 24)
        throw BudgetExceeded("sat oracle: " + std::to_string(f.variable_count) +
                             " variables exceed the brute-force cap of 24");
    SatResult res;
    int n = f.variable_count;
    std::vector<bool> assignment(n, false);
    for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
        for (int i = 0; i < n; ++i) assignment[i] = (bits >> i) & 1ull;
        if (assignment_satisfies(f, assignment, min_true_literals)) {
            res.satisfiable = true;
            res.assignment = assignment;
            return res;
        }
    }
    return res;
}

}  // namespace

SatResult sat_oracle_exists(const CnfFormula& f) { return brute_force(f, 1); }

SatResult sat_oracle_threshold(const CnfFormula& f, int min_true_literals) {
    return brute_force(f, min_true_literals);
}

CnfFormula widen_to_k_of_k2(const CnfFormula& f, int k) {
    if (k < 3) throw std::invalid_argument("widen_to_k_of_k2 requires k >= 3");
    for (const auto& c : f.clauses)
        if (c.size() != 3) throw std::invalid_argument("widen_to_k_of_k2 requires width-3 clauses");
    CnfFormula out;
    out.variable_count = f.variable_count + (k - 1);
    for (const auto& c : f.clauses) {
        std::vector<int> widened = c;
        for (int d = 0; d < k - 1; ++d) widened.push_back(f.variable_count + 1 + d);
        out.clauses.push_back(std::move(widened));
    }
    out.recompute_width();
    return out;
}

CnfFormula pad_even_variables(const CnfFormula& f) {
    for (const auto& c : f.clauses)
        if (c.size() != 3) throw std::invalid_argument("pad_even_variables requires width-3 clauses");
    if (f.variable_count % 2 == 0) return f;
    CnfFormula out = f;
    int n = f.variable_count;
    out.variable_count = n + 3;
    out.clauses.push_back({n + 1, n + 2, n + 3});
    out.recompute_width();
    return out;
}

}  // namespace capnash
