#include "capnash/bipartite.hpp"

#include <algorithm>

namespace capnash {

Bipartite::Bipartite(int nl, int nr, const std::vector<std::pair<int, int>>& edges)
    : left_count(nl), right_count(nr), left_adj(nl) {
    for (const auto& [l, r] : edges) {
        if (l < 0 || l >= nl || r < 0 || r >= nr)
            throw std::invalid_argument("bipartite edge endpoint out of range");
        left_adj[l].push_back(r);
    }
    for (auto& nbrs : left_adj) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("duplicate bipartite edge");
    }
}

namespace {

bool augment(const Bipartite& b, int l, std::vector<int>& left_match,
             std::vector<int>& right_match, std::vector<char>& visited) {
    for (int r : b.left_adj[l]) {
        if (visited[r]) continue;
        visited[r] = 1;
        if (right_match[r] < 0 || augment(b, right_match[r], left_match, right_match, visited)) {
            left_match[l] = r;
            right_match[r] = l;
            return true;
        }
    }
    return false;
}

}  // namespace

Matching max_matching(const Bipartite& b) {
    Matching m;
    m.left_match.assign(b.left_count, -1);
    m.right_match.assign(b.right_count, -1);
    std::vector<char> visited(b.right_count, 0);
    for (int l = 0; l < b.left_count; ++l) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(b, l, m.left_match, m.right_match, visited)) ++m.size;
    }
    return m;
}

std::optional<HallWitness> hall_violator(const Bipartite& b, Side side) {
    // Mirror the graph when the right side is requested so one alternating
    // search serves both.
    const Bipartite* g = &b;
    Bipartite mirrored;
    if (side == Side::right) {
        std::vector<std::pair<int, int>> rev;
        for (int l = 0; l < b.left_count; ++l)
            for (int r : b.left_adj[l]) rev.push_back({r, l});
        mirrored = Bipartite(b.right_count, b.left_count, rev);
        g = &mirrored;
    }

    Matching m = max_matching(*g);
    if (m.size == g->left_count) return std::nullopt;

    // Left vertices reachable by alternating paths from the unmatched ones
    // form a violator: their neighbourhood is exactly the matched partners.
    std::vector<char> in_s(g->left_count, 0);
    std::vector<char> seen_r(g->right_count, 0);
    std::vector<int> stack;
    for (int l = 0; l < g->left_count; ++l)
        if (m.left_match[l] < 0) {
            in_s[l] = 1;
            stack.push_back(l);
        }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : g->left_adj[l]) {
            if (seen_r[r]) continue;
            seen_r[r] = 1;
            int l2 = m.right_match[r];
            if (l2 >= 0 && !in_s[l2]) {
                in_s[l2] = 1;
                stack.push_back(l2);
            }
        }
    }
    HallWitness w;
    w.side = side;
    for (int l = 0; l < g->left_count; ++l)
        if (in_s[l]) w.violator.push_back(l);
    return w;
}

AuxGraph build_aux(const CapacitatedGraph& g, const XYZPartition& part) {
    AuxGraph aux;
    aux.left_ids = part.x_set;
    aux.left_ids.insert(aux.left_ids.end(), part.z_set.begin(), part.z_set.end());
    std::sort(aux.left_ids.begin(), aux.left_ids.end());

    std::vector<int> left_index(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(aux.left_ids.size()); ++i) left_index[aux.left_ids[i]] = i;

    aux.copies_of.assign(g.vertex_count(), {});
    for (int y : part.y_set)
        for (int c = 0; c < g.kappa(y); ++c) {
            aux.copies_of[y].push_back(static_cast<int>(aux.copy_of.size()));
            aux.copy_of.push_back(y);
        }

    std::vector<std::pair<int, int>> edges;
    for (int y : part.y_set)
        for (int u : g.neighbors(y)) {
            if (left_index[u] < 0) continue;
            for (int c : aux.copies_of[y]) edges.push_back({left_index[u], c});
        }
    aux.bip = Bipartite(static_cast<int>(aux.left_ids.size()),
                        static_cast<int>(aux.copy_of.size()), edges);
    return aux;
}

}  // namespace capnash
