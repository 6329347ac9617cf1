#include "oracles.hpp"

#include <algorithm>
#include <bit>

namespace capnash::oracles {

bool naive_is_dset(const CapacitatedGraph& g, const std::vector<int>& s) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> in_s(n, 0);
    for (int v : s) in_s[v] = 1;

    std::vector<Edge> between;
    for (const auto& [u, v] : g.edges())
        if (in_s[u] != in_s[v]) between.push_back({u, v});
    int m = static_cast<int>(between.size());

    std::vector<int> deg(n);
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1ull) {
                ++deg[between[e].first];
                ++deg[between[e].second];
            }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (in_s[v])
                ok = deg[v] == g.demand(v);
            else
                ok = deg[v] >= 1;
        }
        if (ok) return true;
    }
    return false;
}

long long count_nash_pairs(const CapacitatedGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return 1;  // the vacuous subgraph
    if (n > 20) throw std::invalid_argument("count_nash_pairs: graph too large");

    static long long binom[40][40];
    static bool init = false;
    if (!init) {
        for (int a = 0; a < 40; ++a) {
            binom[a][0] = 1;
            for (int b = 1; b <= a; ++b)
                binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
        }
        init = true;
    }

    std::vector<unsigned> nbr(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }

    long long total = 0;
    for (unsigned dmask = 0; dmask < (1u << n); ++dmask) {
        unsigned pmask = ((1u << n) - 1) & ~dmask;
        // Vertices of P adjacent to D; the rest of P can never be covered.
        unsigned coverable = 0;
        for (int v = 0; v < n; ++v)
            if ((dmask >> v) & 1u) coverable |= nbr[v] & pmask;
        if (coverable != pmask) continue;

        // Inclusion-exclusion over the P-vertices forced to stay uncovered.
        // Every cross edge has exactly one D endpoint, so the edge choices
        // factor over D.
        long long signed_sum = 0;
        for (unsigned t = pmask;; t = (t - 1) & pmask) {
            unsigned allowed = pmask & ~t;
            long long product = 1;
            for (int v = 0; v < n && product != 0; ++v)
                if ((dmask >> v) & 1u) {
                    int avail = std::popcount(nbr[v] & allowed);
                    int need = g.demand(v);
                    product *= need <= avail ? binom[avail][need] : 0;
                }
            signed_sum += (std::popcount(t) % 2 ? -1 : 1) * product;
            if (t == 0) break;
        }
        total += signed_sum;
    }
    return total;
}

std::vector<std::vector<int>> naive_enumerate_dsets(const CapacitatedGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.push_back(v);
        if (naive_is_dset(g, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CapacitatedGraph random_gnp(std::mt19937& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.push_back({u, v});
    return CapacitatedGraph(n, std::move(edges), std::vector<int>(n, 0));
}

CapacitatedGraph with_random_kappa(std::mt19937& rng, const CapacitatedGraph& g) {
    std::vector<int> kappa(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uniform_int_distribution<int> pick(0, g.degree(v));
        kappa[v] = pick(rng);
    }
    return CapacitatedGraph(g.vertex_count(), g.edges(), std::move(kappa));
}

CapacitatedGraph with_uniform_kappa(const CapacitatedGraph& g, int k) {
    return CapacitatedGraph(g.vertex_count(), g.edges(),
                            std::vector<int>(g.vertex_count(), k));
}

CapacitatedGraph complete_graph(int n, int kappa) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return CapacitatedGraph(n, std::move(edges), std::vector<int>(n, kappa));
}

}  // namespace capnash::oracles
