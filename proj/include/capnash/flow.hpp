#pragma once

#include <vector>

namespace capnash {

// Dinic max-flow plus a feasibility check for flows with edge lower bounds
// (the usual circulation transformation). Buffers are reusable across calls,
// which matters when a subset enumeration runs millions of checks.
class FlowNetwork {
  public:
    void reset(int node_count);
    // Adds a directed edge and its zero-capacity reverse; returns the edge id.
    int add_edge(int from, int to, long long capacity);
    long long max_flow(int source, int sink);

    // Feasibility of a flow where edge lower bounds have already been folded
    // into node imbalances: excess[v] > 0 means v must absorb that much from
    // the super source, excess[v] < 0 means it must emit it.
    bool feasible_with_excess(const std::vector<long long>& excess, int source, int sink);

  private:
    struct Arc {
        int to;
        long long cap;
    };

    bool bfs_levels(int source, int sink);
    long long dfs_push(int v, int sink, long long limit);

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace capnash
