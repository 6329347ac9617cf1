#include "capnash/graph.hpp"

#include <algorithm>

#include "capnash/flow.hpp"

namespace capnash {

CapacitatedGraph::CapacitatedGraph(int n, std::vector<Edge> edge_list, std::vector<int> kappa)
    : n_(n), adj_(n), kappa_(std::move(kappa)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (static_cast<int>(kappa_.size()) != n)
        throw std::invalid_argument("kappa must be defined for every vertex");
    for (int v = 0; v < n; ++v)
        if (kappa_[v] < 0) throw std::invalid_argument("kappa must be non-negative");

    for (auto& [u, v] : edge_list) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("parallel edges are not allowed");
    edges_ = std::move(edge_list);

    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int CapacitatedGraph::demand(int v) const {
    return std::min(degree(v), kappa_[v]);
}

bool CapacitatedGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void NashSubgraph::canonicalize() {
    std::sort(d_set.begin(), d_set.end());
    std::sort(p_set.begin(), p_set.end());
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
}

CapacitatedGraph normalize(const CapacitatedGraph& g) {
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        if (g.kappa(u) > 0 || g.kappa(v) > 0) kept.push_back({u, v});

    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& [u, v] : kept) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> capped(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) capped[v] = std::min(g.kappa(v), deg[v]);
    return CapacitatedGraph(g.vertex_count(), std::move(kept), std::move(capped));
}

bool is_normalized(const CapacitatedGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.kappa(v) > g.degree(v)) return false;
    for (const auto& [u, v] : g.edges())
        if (g.kappa(u) == 0 && g.kappa(v) == 0) return false;
    return true;
}

XYZPartition partition_xyz(const CapacitatedGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.kappa(v) > g.degree(v))
            throw std::invalid_argument("partition_xyz requires a normalized graph: kappa(" +
                                        std::to_string(v) + ") > degree");
    int n = g.vertex_count();
    std::vector<char> in_x(n, 0), in_y(n, 0);
    XYZPartition part;
    for (int v = 0; v < n; ++v)
        if (g.kappa(v) == g.degree(v)) {
            in_x[v] = 1;
            part.x_set.push_back(v);
        }
    for (int x : part.x_set)
        for (int u : g.neighbors(x))
            if (!in_x[u]) in_y[u] = 1;
    for (int v = 0; v < n; ++v) {
        if (in_x[v]) continue;
        if (in_y[v])
            part.y_set.push_back(v);
        else
            part.z_set.push_back(v);
    }
    return part;
}

namespace {

// 0 = unassigned, 1 = D, 2 = P; rejects duplicates and out-of-range ids.
bool assign_sides(const CapacitatedGraph& g, const std::vector<int>& vs, std::vector<char>& side,
                  char tag) {
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (side[v] != 0) return false;
        side[v] = tag;
    }
    return true;
}

}  // namespace

bool validate_nash(const CapacitatedGraph& g, const NashSubgraph& h) {
    int n = g.vertex_count();
    std::vector<char> side(n, 0);
    if (!assign_sides(g, h.d_set, side, 1)) return false;
    if (!assign_sides(g, h.p_set, side, 2)) return false;
    for (int v = 0; v < n; ++v)
        if (side[v] == 0) return false;  // d_set and p_set must cover V

    std::vector<Edge> es = h.edges;
    for (auto& [u, v] : es)
        if (u > v) std::swap(u, v);
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;

    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : es) {
        if (!g.has_edge(u, v)) return false;
        if (side[u] == side[v]) return false;  // edges go between D and P
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < n; ++v) {
        if (side[v] == 1 && deg[v] != g.demand(v)) return false;
        if (side[v] == 2 && deg[v] < 1) return false;
    }
    return true;
}

bool is_dset(const CapacitatedGraph& g, const std::vector<int>& s) {
    int n = g.vertex_count();
    std::vector<char> in_s(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("is_dset: vertex id out of range");
        in_s[v] = 1;
    }
    if (n == 0) return true;  // vacuous Nash subgraph of the empty graph

    // Nodes: source, one per D-vertex, one per P-vertex, sink. Each D-vertex
    // must ship exactly demand() units across unit-capacity edges into P;
    // each P-vertex must receive at least one unit.
    static thread_local FlowNetwork net;
    std::vector<int> node_of(n, -1);
    int next = 1;
    for (int v = 0; v < n; ++v) node_of[v] = next++;
    int source = 0;
    int sink = next++;
    net.reset(next);

    std::vector<long long> excess(next, 0);
    for (int v = 0; v < n; ++v) {
        if (in_s[v]) {
            // lower == upper == demand, folded straight into the imbalances
            long long need = g.demand(v);
            excess[node_of[v]] += need;
            excess[source] -= need;
        } else {
            int sdeg = 0;
            for (int u : g.neighbors(v))
                if (in_s[u]) ++sdeg;
            if (sdeg == 0) return false;  // P-vertex with no D-neighbour
            excess[sink] += 1;
            excess[node_of[v]] -= 1;
            net.add_edge(node_of[v], sink, sdeg - 1);
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (in_s[u] == in_s[v]) continue;
        int d = in_s[u] ? u : v;
        int p = in_s[u] ? v : u;
        net.add_edge(node_of[d], node_of[p], 1);
    }
    return net.feasible_with_excess(excess, source, sink);
}

bool is_independent(const CapacitatedGraph& g, const std::vector<int>& s) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    for (const auto& [u, v] : g.edges())
        if (in_s[u] && in_s[v]) return false;
    return true;
}

}  // namespace capnash
