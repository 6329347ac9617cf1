#pragma once

#include <random>
#include <vector>

#include "capnash/graph.hpp"

// Brute-force reference implementations. They stay deliberately independent
// of the library's flow/matching code paths so the two can check each other.
namespace capnash::oracles {

// Tries every edge subset between s and its complement. Needs few edges.
bool naive_is_dset(const CapacitatedGraph& g, const std::vector<int>& s);

// Number of (D, E') pairs forming a valid Nash subgraph, counted by
// inclusion-exclusion over uncovered P-vertices. Uniqueness == (count == 1).
long long count_nash_pairs(const CapacitatedGraph& g);

std::vector<std::vector<int>> naive_enumerate_dsets(const CapacitatedGraph& g);

CapacitatedGraph random_gnp(std::mt19937& rng, int n, double p);

// kappa(v) uniform in [0, d(v)]
CapacitatedGraph with_random_kappa(std::mt19937& rng, const CapacitatedGraph& g);

CapacitatedGraph with_uniform_kappa(const CapacitatedGraph& g, int k);

CapacitatedGraph complete_graph(int n, int kappa);

}  // namespace capnash::oracles
