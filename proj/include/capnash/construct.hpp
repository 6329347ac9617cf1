#pragma once

#include <optional>

#include "capnash/graph.hpp"

namespace capnash {

// Builds a DP-Nash subgraph of any capacitated graph (normalization applied
// internally). All choices are resolved by lowest id, so the output is a
// reproducible function of the input.
NashSubgraph construct_nash(const CapacitatedGraph& g);

// Seeded variant: u ends up in the D-set and N(u) n X ends up in the P-set;
// if w is given it is forced into the P-set as well. Requires g normalized,
// |N(u) n X| <= kappa(u), and for the w form |N(u) n X| < kappa(u) with
// w a neighbour of u outside X. Violations throw std::invalid_argument
// naming the failing inequality.
NashSubgraph construct_nash_seeded(const CapacitatedGraph& g, int u,
                                   std::optional<int> w = std::nullopt);

// The (X u Z, Y) subgraph: all X-Y edges plus the kappa(z) lowest-id edges
// at each z. Exists iff X u Z is independent; returns nullopt otherwise.
// Requires g normalized.
std::optional<NashSubgraph> canonical_nash(const CapacitatedGraph& g);

}  // namespace capnash
