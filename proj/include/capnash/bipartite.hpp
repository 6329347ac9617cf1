#pragma once

#include <optional>
#include <vector>

#include "capnash/graph.hpp"

namespace capnash {

// Bipartite graph over dense left ids 0..left_count-1 and right ids
// 0..right_count-1. Adjacency is kept sorted.
struct Bipartite {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::vector<int>> left_adj;  // left id -> sorted right ids

    Bipartite() = default;
    Bipartite(int nl, int nr, const std::vector<std::pair<int, int>>& edges);
};

struct Matching {
    std::vector<int> left_match;   // left id -> right id or -1
    std::vector<int> right_match;  // right id -> left id or -1
    int size = 0;
};

enum class Side { left, right };

// A set S on one side with |N(S)| < |S|, certifying Hall's condition fails.
struct HallWitness {
    Side side;
    std::vector<int> violator;
};

// Bipartite auxiliary graph: left side is X u Z (original ids), right side
// holds kappa(y) copies of every y in Y. Copies inherit y's adjacency.
struct AuxGraph {
    Bipartite bip;
    std::vector<int> left_ids;                // left index -> vertex id of g
    std::vector<int> copy_of;                 // right index -> vertex id of g
    std::vector<std::vector<int>> copies_of;  // vertex id -> its right indices
};

// Maximum-cardinality matching; augmenting paths are explored in ascending
// id order so the result is reproducible.
Matching max_matching(const Bipartite& b);

// nullopt iff some maximum matching saturates the requested side; otherwise
// a Hall violator extracted from alternating reachability.
std::optional<HallWitness> hall_violator(const Bipartite& b, Side side);

// Requires g normalized and part == partition_xyz(g).
AuxGraph build_aux(const CapacitatedGraph& g, const XYZPartition& part);

}  // namespace capnash
