#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capnash/graph.hpp"

namespace capnash {

// Outcome of a uniqueness decision. `method` names the rung of the decision
// ladder that produced the verdict; when uniqueness fails and a certificate
// is cheap to build, a second Nash subgraph or second D-set rides along.
struct UniquenessVerdict {
    bool unique = false;
    std::string method;
    std::optional<NashSubgraph> witness_subgraph;
    std::optional<std::vector<int>> witness_dset;
};

// L(W) = { x in X u Z : |N(x) n W| > d(x) - kappa(x) } together with the
// capacity-expanded size of W.
struct LWResult {
    std::vector<int> w_set;
    std::vector<int> l_set;
    long long w_kappa_size = 0;
};

struct DecideBudget {
    int ostar_cap = 22;        // max |Y^{kappa>0}| for the subset scans
    int enum_vertex_cap = 24;  // max n for the enumeration fallback
};

// Requires g normalized, part = partition_xyz(g), and w_set a nonempty
// subset of Y^{kappa>0}; violations throw std::invalid_argument.
LWResult compute_lw(const CapacitatedGraph& g, const XYZPartition& part,
                    const std::vector<int>& w_set);

// O*: |L(W)| > |W^kappa| for every nonempty W subseteq Y^{kappa>0}.
// M*: no matching from L(W) into W's copies saturates L(W), for every such W.
// Both require g normalized and throw BudgetExceeded when |Y^{kappa>0}|
// exceeds the cap. Each is equivalent to D-set uniqueness when X u Z is
// independent, so they double-check one another in tests.
bool check_ostar(const CapacitatedGraph& g, int cap = 22);
bool check_mstar(const CapacitatedGraph& g, int cap = 22);

// Polynomial decision of DP-Nash-subgraph uniqueness. Not unique when X u Z
// has an internal edge or some z in Z has positive capacity (re-picking its
// edges varies the subgraph); otherwise unique iff for every x in X the
// bipartite graph between X \ {x} and the capacity copies of Y admits a
// matching saturating the copies.
UniquenessVerdict unique_nash(const CapacitatedGraph& g);

// D-set uniqueness ladder: X u Z independence, the all-zero and all-one
// capacity shortcuts, delegation to unique_nash when Z is empty, then the
// O* scan with an enumeration fallback. Throws BudgetExceeded when both
// exponential rungs are out of budget.
UniquenessVerdict unique_dset(const CapacitatedGraph& g, const DecideBudget& budget = {});

}  // namespace capnash
