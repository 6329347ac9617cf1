#include "capnash/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace capnash {

void FlowNetwork::reset(int node_count) {
    n_ = node_count;
    arcs_.clear();
    out_.assign(n_, {});
    level_.assign(n_, -1);
    iter_.assign(n_, 0);
}

int FlowNetwork::add_edge(int from, int to, long long capacity) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    out_[from].push_back(id);
    arcs_.push_back({from, 0});
    out_[to].push_back(id + 1);
    return id;
}

bool FlowNetwork::bfs_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : out_[v]) {
            const Arc& a = arcs_[id];
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[v] + 1;
                q.push(a.to);
            }
        }
    }
    return level_[sink] >= 0;
}

long long FlowNetwork::dfs_push(int v, int sink, long long limit) {
    if (v == sink) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(out_[v].size()); ++i) {
        int id = out_[v][i];
        Arc& a = arcs_[id];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
        long long pushed = dfs_push(a.to, sink, std::min(limit, a.cap));
        if (pushed > 0) {
            a.cap -= pushed;
            arcs_[id ^ 1].cap += pushed;
            return pushed;
        }
    }
    return 0;
}

long long FlowNetwork::max_flow(int source, int sink) {
    long long total = 0;
    while (bfs_levels(source, sink)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (long long pushed = dfs_push(source, sink, std::numeric_limits<long long>::max()))
            total += pushed;
    }
    return total;
}

bool FlowNetwork::feasible_with_excess(const std::vector<long long>& excess, int source, int sink) {
    // Super source/sink absorb the folded lower bounds; the original flow is
    // feasible iff all super-source arcs saturate.
    int ss = n_;
    int tt = n_ + 1;
    out_.resize(n_ + 2);
    level_.assign(n_ + 2, -1);
    iter_.assign(n_ + 2, 0);
    int saved_n = n_;
    n_ += 2;

    long long required = 0;
    for (int v = 0; v < saved_n; ++v) {
        if (excess[v] > 0) {
            add_edge(ss, v, excess[v]);
            required += excess[v];
        } else if (excess[v] < 0) {
            add_edge(v, tt, -excess[v]);
        }
    }
    add_edge(sink, source, std::numeric_limits<long long>::max() / 4);
    return max_flow(ss, tt) == required;
}

}  // namespace capnash
