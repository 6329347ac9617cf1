#include "capnash/construct.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace capnash {

namespace {

// Working copy of a graph that supports vertex and edge removal while the
// star-peeling loop runs. Adjacency sets iterate in id order.
struct PeelState {
    std::vector<std::set<int>> adj;
    std::vector<int> kappa;
    std::vector<char> alive;
    int alive_count = 0;

    explicit PeelState(const CapacitatedGraph& g)
        : adj(g.vertex_count()), kappa(g.kappas()), alive(g.vertex_count(), 1),
          alive_count(g.vertex_count()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void remove_edge(int u, int v) {
        adj[u].erase(v);
        adj[v].erase(u);
    }

    void remove_vertex(int v) {
        for (int u : adj[v]) adj[u].erase(v);
        adj[v].clear();
        alive[v] = 0;
        --alive_count;
    }

    // Cap kappa at degree and drop edges between two capacity-0 vertices,
    // repeated to a fixpoint.
    void renormalize() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
                if (!alive[u] || kappa[u] > 0) continue;
                std::vector<int> drop;
                for (int v : adj[u])
                    if (kappa[v] == 0) drop.push_back(v);
                for (int v : drop) {
                    remove_edge(u, v);
                    changed = true;
                }
            }
            for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
                if (!alive[u]) continue;
                if (kappa[u] > degree(u)) {
                    kappa[u] = degree(u);
                    changed = true;
                }
            }
        }
    }
};

struct Star {
    int center;
    std::vector<int> leaves;
    // State at peel time, needed when the unwind tops up deficient vertices:
    // residual capacities, and each leaf's neighbours that survive the peel.
    std::vector<int> kappa_at_peel;
    std::vector<std::vector<int>> leaf_survivor_nbrs;
};

// Existence loop: repeatedly peel the star of the lowest-id vertex whose
// degree equals its capacity; if none exists, delete edges at the lowest-id
// vertex until one does.
std::vector<Star> peel_stars(PeelState& st) {
    std::vector<Star> stars;
    int n = static_cast<int>(st.adj.size());
    while (st.alive_count > 0) {
        st.renormalize();
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (st.alive[v] && st.degree(v) == st.kappa[v]) {
                u = v;
                break;
            }
        if (u < 0) {
            int w = 0;
            while (!st.alive[w]) ++w;
            int surplus = st.degree(w) - st.kappa[w];
            std::vector<int> victims(st.adj[w].begin(), st.adj[w].end());
            for (int i = 0; i < surplus; ++i) st.remove_edge(w, victims[i]);
            continue;
        }

        Star s;
        s.center = u;
        s.leaves.assign(st.adj[u].begin(), st.adj[u].end());
        s.kappa_at_peel = st.kappa;
        st.remove_vertex(u);
        for (int leaf : s.leaves) {
            std::vector<int> nbrs;
            for (int x : st.adj[leaf])
                if (x != u && !std::binary_search(s.leaves.begin(), s.leaves.end(), x))
                    nbrs.push_back(x);
            s.leaf_survivor_nbrs.push_back(std::move(nbrs));
        }
        for (int leaf : s.leaves) st.remove_vertex(leaf);
        stars.push_back(std::move(s));
    }
    return stars;
}

// Reassembles the stars innermost-first, topping up each already-placed
// D-vertex to its capacity at that level with edges into the fresh leaves.
NashSubgraph unwind_stars(int n, const std::vector<Star>& stars) {
    NashSubgraph h;
    std::vector<int> deg(n, 0);
    std::vector<char> in_d(n, 0);

    auto add_edge = [&](int a, int b) {
        h.edges.push_back({a, b});
        ++deg[a];
        ++deg[b];
    };

    for (auto it = stars.rbegin(); it != stars.rend(); ++it) {
        const Star& s = *it;
        for (int v = 0; v < n; ++v) {
            if (!in_d[v] || deg[v] >= s.kappa_at_peel[v]) continue;
            for (size_t j = 0; j < s.leaves.size() && deg[v] < s.kappa_at_peel[v]; ++j) {
                const auto& nbrs = s.leaf_survivor_nbrs[j];
                if (std::binary_search(nbrs.begin(), nbrs.end(), v)) add_edge(v, s.leaves[j]);
            }
            assert(deg[v] == s.kappa_at_peel[v]);
        }
        for (int leaf : s.leaves) {
            add_edge(s.center, leaf);
            h.p_set.push_back(leaf);
        }
        in_d[s.center] = 1;
        h.d_set.push_back(s.center);
    }
    h.canonicalize();
    return h;
}

}  // namespace

NashSubgraph construct_nash(const CapacitatedGraph& g) {
    CapacitatedGraph gn = normalize(g);
    PeelState st(gn);
    auto stars = peel_stars(st);
    return unwind_stars(gn.vertex_count(), stars);
}

NashSubgraph construct_nash_seeded(const CapacitatedGraph& g, int u, std::optional<int> w) {
    if (!is_normalized(g))
        throw std::invalid_argument("construct_nash_seeded requires a normalized graph");
    if (u < 0 || u >= g.vertex_count())
        throw std::invalid_argument("construct_nash_seeded: u out of range");

    XYZPartition part = partition_xyz(g);
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int x : part.x_set) in_x[x] = 1;

    std::vector<int> x_nbrs;
    for (int v : g.neighbors(u))
        if (in_x[v]) x_nbrs.push_back(v);
    int nx = static_cast<int>(x_nbrs.size());

    if (!w) {
        if (nx > g.kappa(u))
            throw std::invalid_argument("|N(u) n X| = " + std::to_string(nx) +
                                        " exceeds kappa(u) = " + std::to_string(g.kappa(u)));
    } else {
        if (nx >= g.kappa(u))
            throw std::invalid_argument("|N(u) n X| = " + std::to_string(nx) + " is not < kappa(u) = " +
                                        std::to_string(g.kappa(u)));
        if (!g.has_edge(u, *w) || in_x[*w])
            throw std::invalid_argument("w must be a neighbour of u outside X");
    }

    // E*: kappa(u) edges at u covering N(u) n X (and w), rest by lowest id.
    std::vector<int> chosen = x_nbrs;
    std::vector<char> taken(g.vertex_count(), 0);
    for (int v : chosen) taken[v] = 1;
    if (w && !taken[*w]) {
        chosen.push_back(*w);
        taken[*w] = 1;
    }
    for (int v : g.neighbors(u)) {
        if (static_cast<int>(chosen.size()) >= g.kappa(u)) break;
        if (!taken[v]) {
            chosen.push_back(v);
            taken[v] = 1;
        }
    }
    std::sort(chosen.begin(), chosen.end());

    PeelState st(g);
    st.remove_vertex(u);
    for (int t : chosen) st.remove_vertex(t);
    auto stars = peel_stars(st);
    NashSubgraph h = unwind_stars(g.vertex_count(), stars);

    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& [a, b] : h.edges) {
        ++deg[a];
        ++deg[b];
    }
    for (int t : chosen) {
        h.edges.push_back({u, t});
        ++deg[u];
        ++deg[t];
    }
    // Top up inner D-vertices that lost capacity when {u} u T' was removed.
    for (int v : h.d_set) {
        for (int t : chosen) {
            if (deg[v] >= g.kappa(v)) break;
            if (g.has_edge(v, t)) {
                h.edges.push_back({v, t});
                ++deg[v];
                ++deg[t];
            }
        }
        assert(deg[v] == g.kappa(v));
    }
    h.d_set.push_back(u);
    h.p_set.insert(h.p_set.end(), chosen.begin(), chosen.end());
    h.canonicalize();
    return h;
}

std::optional<NashSubgraph> canonical_nash(const CapacitatedGraph& g) {
    if (!is_normalized(g)) throw std::invalid_argument("canonical_nash requires a normalized graph");
    XYZPartition part = partition_xyz(g);

    std::vector<int> d = part.x_set;
    d.insert(d.end(), part.z_set.begin(), part.z_set.end());
    if (!is_independent(g, d)) return std::nullopt;

    NashSubgraph h;
    h.d_set = std::move(d);
    h.p_set = part.y_set;
    for (int x : part.x_set)
        for (int y : g.neighbors(x)) h.edges.push_back({x, y});
    for (int z : part.z_set) {
        int take = g.kappa(z);
        for (int y : g.neighbors(z)) {
            if (take == 0) break;
            h.edges.push_back({z, y});
            --take;
        }
    }
    h.canonicalize();
    return h;
}

}  // namespace capnash
