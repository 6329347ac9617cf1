#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capnash {

using Edge = std::pair<int, int>;  // undirected, stored with first < second

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected simple graph with a non-negative integer capacity per vertex.
// Vertex ids are dense 0..n-1 and adjacency lists are kept sorted, so every
// iteration order downstream is reproducible.
class CapacitatedGraph {
  public:
    CapacitatedGraph() = default;
    CapacitatedGraph(int n, std::vector<Edge> edge_list, std::vector<int> kappa);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int kappa(int v) const { return kappa_[v]; }
    // min(d_G(v), kappa(v)): the degree a D-vertex must have in a Nash subgraph
    int demand(int v) const;
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& kappas() const { return kappa_; }

    bool operator==(const CapacitatedGraph&) const = default;

  private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<int> kappa_;
    std::vector<Edge> edges_;
};

// A claimed DP-Nash subgraph: D/P vertex sets plus the chosen edges.
// Always validated against a graph, never trusted.
struct NashSubgraph {
    std::vector<int> d_set;
    std::vector<int> p_set;
    std::vector<Edge> edges;

    void canonicalize();  // sort sets and edges, normalize edge endpoint order
    bool operator==(const NashSubgraph&) const = default;
};

struct XYZPartition {
    std::vector<int> x_set;  // kappa(v) == degree(v)
    std::vector<int> y_set;  // N(X) \ X
    std::vector<int> z_set;  // the rest
};

// Caps kappa at vertex degree and drops edges whose two endpoints both have
// capacity zero. Idempotent; preserves the set of valid Nash subgraphs.
CapacitatedGraph normalize(const CapacitatedGraph& g);

bool is_normalized(const CapacitatedGraph& g);

// Requires a normalized graph (throws std::invalid_argument otherwise).
XYZPartition partition_xyz(const CapacitatedGraph& g);

// True iff h is a DP-Nash subgraph of g: d_set/p_set partition V, edges are
// edges of g across the partition, every D-vertex has degree exactly
// min(d_G, kappa) and no P-vertex is isolated. Works on raw (un-normalized)
// graphs. Malformed input (bad ids, duplicates) yields false.
bool validate_nash(const CapacitatedGraph& g, const NashSubgraph& h);

// True iff some edge set E' across (s, V\s) gives every vertex of s degree
// exactly min(d_G, kappa) and every vertex outside s degree >= 1. Decided by
// a feasible-flow computation with lower bounds.
bool is_dset(const CapacitatedGraph& g, const std::vector<int>& s);

bool is_independent(const CapacitatedGraph& g, const std::vector<int>& s);

}  // namespace capnash
