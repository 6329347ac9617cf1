#include "capnash/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

namespace capnash {

namespace {

// Lexicographic DFS over subsets with first element >= start. Returns true
// when the caller asked to stop.
bool lex_scan(const CapacitatedGraph& g, int start, std::vector<int>& cur,
              const std::function<bool(const std::vector<int>&)>& visit) {
    int n = g.vertex_count();
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        if (visit(cur)) return true;
        if (lex_scan(g, v + 1, cur, visit)) return true;
        cur.pop_back();
    }
    return false;
}

DSetReport scan_shard(const CapacitatedGraph& g, int first) {
    DSetReport rep;
    std::vector<int> cur{first};
    auto visit = [&](const std::vector<int>& s) {
        ++rep.explored;
        if (is_dset(g, s)) rep.dsets.push_back(s);
        return false;
    };
    visit(cur);
    lex_scan(g, first + 1, cur, visit);
    return rep;
}

}  // namespace

DSetReport enumerate_dsets(const CapacitatedGraph& g, std::optional<unsigned long long> limit,
                           int vertex_cap, int jobs) {
    int n = g.vertex_count();
    if (n > vertex_cap)
        throw BudgetExceeded("enumerate_dsets: n = " + std::to_string(n) +
                             " exceeds the exhaustive cap " + std::to_string(vertex_cap));
    DSetReport rep;
    if (n == 0) {
        // The empty graph has the vacuous Nash subgraph with empty D-set.
        rep.dsets.push_back({});
        rep.explored = 1;
        return rep;
    }
    if (limit && *limit == 0) {
        rep.complete = false;
        return rep;
    }

    if (jobs > 1 && !limit) {
        std::vector<DSetReport> shards(n);
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int v = next.fetch_add(1); v < n; v = next.fetch_add(1))
                shards[v] = scan_shard(g, v);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min(jobs, n); ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& s : shards) {
            rep.explored += s.explored;
            rep.dsets.insert(rep.dsets.end(), s.dsets.begin(), s.dsets.end());
        }
        return rep;
    }

    std::vector<int> cur;
    bool truncated = false;
    auto visit = [&](const std::vector<int>& s) {
        ++rep.explored;
        if (!is_dset(g, s)) return false;
        if (limit && rep.dsets.size() == *limit) {
            // One D-set beyond the limit exists; that is all we need to know.
            truncated = true;
            return true;
        }
        rep.dsets.push_back(s);
        return false;
    };
    lex_scan(g, 0, cur, visit);
    rep.complete = !truncated;
    return rep;
}

DSetReport enumerate_dsets_pruned(const CapacitatedGraph& g, double timeout_seconds) {
    int n = g.vertex_count();
    DSetReport rep;
    if (n == 0) {
        rep.dsets.push_back({});
        rep.explored = 1;
        return rep;
    }

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(timeout_seconds));

    enum : char { UNSET = 0, D = 1, P = 2 };
    std::vector<char> label(n, UNSET);
    std::vector<int> d_nbrs(n, 0), p_nbrs(n, 0);
    int assigned = 0;
    unsigned long long steps = 0;
    bool timed_out = false;

    auto out_of_time = [&] {
        if (timed_out) return true;
        if ((++steps & 1023) == 0 && std::chrono::steady_clock::now() > deadline) timed_out = true;
        return timed_out;
    };

    // A vertex may take a label only if neither it nor a neighbour becomes
    // dead under the two rules.
    auto consistent = [&](int v, char lab) {
        if (lab == D) {
            if (g.degree(v) - d_nbrs[v] < g.demand(v)) return false;
            for (int u : g.neighbors(v))
                if (label[u] == D && g.degree(u) - d_nbrs[u] - 1 < g.demand(u)) return false;
        } else {
            if (p_nbrs[v] == g.degree(v)) return false;  // covers isolated v
            for (int u : g.neighbors(v))
                if (label[u] == P && p_nbrs[u] + 1 == g.degree(u)) return false;
        }
        return true;
    };

    auto set_label = [&](int v, char lab) {
        label[v] = lab;
        ++assigned;
        for (int u : g.neighbors(v)) (lab == D ? d_nbrs[u] : p_nbrs[u])++;
    };
    auto clear_label = [&](int v) {
        char lab = label[v];
        label[v] = UNSET;
        --assigned;
        for (int u : g.neighbors(v)) (lab == D ? d_nbrs[u] : p_nbrs[u])--;
    };

    std::vector<int> trail;  // assignments made by propagation, for undo

    auto search = [&](auto&& self) -> void {
        if (out_of_time()) return;

        // Propagate forced labels to a fixpoint.
        size_t trail_mark = trail.size();
        bool contradiction = false;
        bool changed = true;
        while (changed && !contradiction) {
            changed = false;
            for (int v = 0; v < n && !contradiction; ++v) {
                if (label[v] != UNSET) continue;
                bool can_d = consistent(v, D);
                bool can_p = consistent(v, P);
                if (!can_d && !can_p)
                    contradiction = true;
                else if (can_d != can_p) {
                    set_label(v, can_d ? D : P);
                    trail.push_back(v);
                    changed = true;
                }
            }
        }

        if (!contradiction) {
            if (assigned == n) {
                ++rep.explored;
                std::vector<int> d;
                for (int v = 0; v < n; ++v)
                    if (label[v] == D) d.push_back(v);
                if (is_dset(g, d)) rep.dsets.push_back(std::move(d));
            } else {
                int v = 0;
                while (label[v] != UNSET) ++v;
                for (char lab : {D, P}) {
                    set_label(v, lab);
                    self(self);
                    clear_label(v);
                    if (timed_out) break;
                }
            }
        }

        while (trail.size() > trail_mark) {
            clear_label(trail.back());
            trail.pop_back();
        }
    };
    search(search);

    rep.complete = !timed_out;
    std::sort(rep.dsets.begin(), rep.dsets.end());
    return rep;
}

unsigned long long count_dsets(const CapacitatedGraph& g, int vertex_cap) {
    return enumerate_dsets(g, std::nullopt, vertex_cap).dsets.size();
}

}  // namespace capnash
