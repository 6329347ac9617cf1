#include "capnash/decide.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>

#include "capnash/bipartite.hpp"
#include "capnash/construct.hpp"
#include "capnash/enumerate.hpp"

namespace capnash {

namespace {

std::vector<int> y_kappa_positive(const CapacitatedGraph& g, const XYZPartition& part) {
    std::vector<int> ys;
    for (int y : part.y_set)
        if (g.kappa(y) > 0) ys.push_back(y);
    return ys;
}

std::vector<int> xz_union(const XYZPartition& part) {
    std::vector<int> xz = part.x_set;
    xz.insert(xz.end(), part.z_set.begin(), part.z_set.end());
    std::sort(xz.begin(), xz.end());
    return xz;
}

// Incremental scan over nonempty W subseteq Y^{kappa>0} in Gray-code order,
// keeping |N(x) n W| counters so each step costs one neighbourhood update.
// Calls visit(W-bitmask) and stops early when it returns true.
template <typename Visit>
void scan_w_subsets(const CapacitatedGraph& g, const std::vector<int>& ykp,
                    const std::vector<int>& thresh, std::vector<int>& count,
                    long long& l_size, long long& w_kappa, Visit visit) {
    int k = static_cast<int>(ykp.size());
    unsigned long long prev = 0;
    for (unsigned long long t = 1; t < (1ull << k); ++t) {
        unsigned long long code = t ^ (t >> 1);
        unsigned long long diff = code ^ prev;
        int j = std::countr_zero(diff);
        int y = ykp[j];
        bool added = (code >> j) & 1ull;
        w_kappa += added ? g.kappa(y) : -g.kappa(y);
        for (int x : g.neighbors(y)) {
            if (thresh[x] < 0) continue;  // not in X u Z
            if (added) {
                if (++count[x] == thresh[x] + 1) ++l_size;
            } else {
                if (count[x]-- == thresh[x] + 1) --l_size;
            }
        }
        prev = code;
        if (visit(code)) return;
    }
}

struct WScanContext {
    std::vector<int> ykp;
    std::vector<int> thresh;  // d(x)-kappa(x) for x in X u Z, -1 elsewhere
    std::vector<int> count;
};

WScanContext make_scan_context(const CapacitatedGraph& g, const XYZPartition& part) {
    WScanContext ctx;
    ctx.ykp = y_kappa_positive(g, part);
    ctx.thresh.assign(g.vertex_count(), -1);
    for (int x : part.x_set) ctx.thresh[x] = g.degree(x) - g.kappa(x);
    for (int z : part.z_set) ctx.thresh[z] = g.degree(z) - g.kappa(z);
    ctx.count.assign(g.vertex_count(), 0);
    return ctx;
}

std::vector<int> unmask(const std::vector<int>& ykp, unsigned long long mask) {
    std::vector<int> w;
    for (int j = 0; j < static_cast<int>(ykp.size()); ++j)
        if ((mask >> j) & 1ull) w.push_back(ykp[j]);
    return w;
}

std::vector<int> lw_members(const CapacitatedGraph& g, const WScanContext& ctx) {
    std::vector<int> l;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (ctx.thresh[x] >= 0 && ctx.count[x] > ctx.thresh[x]) l.push_back(x);
    return l;
}

void require_normalized(const CapacitatedGraph& g, const char* who) {
    if (!is_normalized(g)) throw std::invalid_argument(std::string(who) + " requires a normalized graph");
}

void check_cap(size_t k, int cap, const char* who) {
    if (static_cast<int>(k) > cap)
        throw BudgetExceeded(std::string(who) + ": |Y^{kappa>0}| = " + std::to_string(k) +
                             " exceeds the cap " + std::to_string(cap));
}

// First W (in scan order) with |L(W)| <= |W^kappa|.
std::optional<std::vector<int>> find_ostar_violation(const CapacitatedGraph& g,
                                                     const XYZPartition& part) {
    WScanContext ctx = make_scan_context(g, part);
    long long l_size = 0, w_kappa = 0;
    std::optional<std::vector<int>> found;
    scan_w_subsets(g, ctx.ykp, ctx.thresh, ctx.count, l_size, w_kappa,
                   [&](unsigned long long mask) {
                       if (l_size <= w_kappa) {
                           found = unmask(ctx.ykp, mask);
                           return true;
                       }
                       return false;
                   });
    return found;
}

// Matching from L(W) into the capacity copies of W; saturating means M*
// fails at this W.
bool lw_matching_saturates(const CapacitatedGraph& g, const std::vector<int>& l,
                           const std::vector<int>& w, Matching* out = nullptr,
                           std::vector<int>* copy_owner = nullptr) {
    std::vector<int> left_index(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(l.size()); ++i) left_index[l[i]] = i;
    std::vector<int> owner;
    std::vector<std::pair<int, int>> edges;
    for (int y : w) {
        for (int c = 0; c < g.kappa(y); ++c) {
            int right = static_cast<int>(owner.size());
            owner.push_back(y);
            for (int x : g.neighbors(y))
                if (left_index[x] >= 0) edges.push_back({left_index[x], right});
        }
    }
    Bipartite bip(static_cast<int>(l.size()), static_cast<int>(owner.size()), edges);
    Matching m = max_matching(bip);
    if (out) *out = m;
    if (copy_owner) *copy_owner = owner;
    return m.size == static_cast<int>(l.size());
}

std::optional<std::vector<int>> find_mstar_violation(const CapacitatedGraph& g,
                                                     const XYZPartition& part) {
    WScanContext ctx = make_scan_context(g, part);
    long long l_size = 0, w_kappa = 0;
    std::optional<std::vector<int>> found;
    scan_w_subsets(g, ctx.ykp, ctx.thresh, ctx.count, l_size, w_kappa,
                   [&](unsigned long long mask) {
                       std::vector<int> l = lw_members(g, ctx);
                       std::vector<int> w = unmask(ctx.ykp, mask);
                       if (lw_matching_saturates(g, l, w)) {
                           found = std::move(w);
                           return true;
                       }
                       return false;
                   });
    return found;
}

// Nash subgraph of the subgraph induced by the survivors, mapped back to the
// ids of g. Relative id order is preserved, so lowest-id tie breaks agree.
NashSubgraph construct_on_survivors(const CapacitatedGraph& g, const std::vector<char>& removed) {
    std::vector<int> to_sub(g.vertex_count(), -1), to_full;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) {
            to_sub[v] = static_cast<int>(to_full.size());
            to_full.push_back(v);
        }
    std::vector<Edge> edges;
    std::vector<int> kappa(to_full.size());
    for (size_t i = 0; i < to_full.size(); ++i) kappa[i] = g.kappa(to_full[i]);
    for (const auto& [u, v] : g.edges())
        if (to_sub[u] >= 0 && to_sub[v] >= 0) edges.push_back({to_sub[u], to_sub[v]});
    NashSubgraph sub = construct_nash(CapacitatedGraph(static_cast<int>(to_full.size()),
                                                       std::move(edges), std::move(kappa)));
    NashSubgraph h;
    for (int v : sub.d_set) h.d_set.push_back(to_full[v]);
    for (int v : sub.p_set) h.p_set.push_back(to_full[v]);
    for (const auto& [u, v] : sub.edges) h.edges.push_back({to_full[u], to_full[v]});
    return h;
}

// Builds a Nash subgraph whose D-set differs from X u Z, given any W with
// |L(W)| <= |W^kappa|. If some y in Y has at most kappa(y) X-neighbours a
// seeded construction already does it; otherwise shrink W along Hall
// violators until L(W) matches into W's copies, then assemble the subgraph
// with D = W on the removed part and a recursive construction on the rest.
NashSubgraph second_nash_from_violation(const CapacitatedGraph& g, const XYZPartition& part,
                                        std::vector<int> w) {
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int x : part.x_set) in_x[x] = 1;
    for (int y : part.y_set) {
        int nx = 0;
        for (int u : g.neighbors(y))
            if (in_x[u]) ++nx;
        if (nx <= g.kappa(y)) return construct_nash_seeded(g, y);
    }

    WScanContext ctx = make_scan_context(g, part);
    Matching m;
    std::vector<int> copy_owner;
    std::vector<int> l;
    while (true) {
        std::fill(ctx.count.begin(), ctx.count.end(), 0);
        for (int y : w)
            for (int x : g.neighbors(y))
                if (ctx.thresh[x] >= 0) ++ctx.count[x];
        l = lw_members(g, ctx);
        if (lw_matching_saturates(g, l, w, &m, &copy_owner)) break;

        // Shrink: drop N(T) n W for a Hall violator T in L(W).
        std::vector<int> left_index(g.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(l.size()); ++i) left_index[l[i]] = i;
        std::vector<std::pair<int, int>> edges;
        for (int r = 0; r < static_cast<int>(copy_owner.size()); ++r)
            for (int x : g.neighbors(copy_owner[r]))
                if (left_index[x] >= 0) edges.push_back({left_index[x], r});
        Bipartite bip(static_cast<int>(l.size()), static_cast<int>(copy_owner.size()), edges);
        auto witness = hall_violator(bip, Side::left);
        if (!witness) throw std::logic_error("W-descent: unsaturated side without Hall violator");
        std::vector<char> drop(g.vertex_count(), 0);
        for (int li : witness->violator)
            for (int u : g.neighbors(l[li])) drop[u] = 1;
        std::vector<int> next;
        for (int y : w)
            if (!drop[y]) next.push_back(y);
        if (next.size() >= w.size() || next.empty())
            throw std::logic_error("W-descent failed to shrink towards a matchable set");
        w = std::move(next);
    }

    // D1 = W, P1 = L(W): matched edges first, then top up every W-vertex to
    // exactly its capacity with further edges into L(W).
    NashSubgraph h;
    std::set<Edge> used;
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<char> in_l(g.vertex_count(), 0);
    for (int x : l) in_l[x] = 1;
    auto add_edge = [&](int a, int b) {
        h.edges.push_back({a, b});
        used.insert({std::min(a, b), std::max(a, b)});
        ++deg[a];
        ++deg[b];
    };
    for (int i = 0; i < static_cast<int>(l.size()); ++i) {
        if (m.left_match[i] < 0) throw std::logic_error("witness assembly: L(W) not saturated");
        add_edge(l[i], copy_owner[m.left_match[i]]);
    }
    for (int u : w)
        for (int p : g.neighbors(u)) {
            if (deg[u] >= g.kappa(u)) break;
            if (in_l[p] && !used.count({std::min(u, p), std::max(u, p)})) add_edge(u, p);
        }
    for (int u : w)
        if (deg[u] != g.kappa(u))
            throw std::logic_error("witness assembly: W-vertex missed its capacity");

    std::vector<char> removed(g.vertex_count(), 0);
    for (int y : w) removed[y] = 1;
    for (int x : l) removed[x] = 1;
    NashSubgraph rest = construct_on_survivors(g, removed);
    for (const auto& [a, b] : rest.edges) add_edge(a, b);
    for (int u : rest.d_set)
        for (int p : g.neighbors(u)) {
            if (deg[u] >= g.kappa(u)) break;
            if (in_l[p]) add_edge(u, p);
        }
    for (int u : rest.d_set)
        if (deg[u] != g.kappa(u))
            throw std::logic_error("witness assembly: inner D-vertex missed its capacity");

    h.d_set = w;
    h.d_set.insert(h.d_set.end(), rest.d_set.begin(), rest.d_set.end());
    h.p_set = l;
    h.p_set.insert(h.p_set.end(), rest.p_set.begin(), rest.p_set.end());
    h.canonicalize();
    return h;
}

// Two vertices of X u Z joined by an edge always live on the same side of
// the partition; a seeded construction puts one of them in D and the other
// in P, which certifies a second D-set.
NashSubgraph second_nash_xz_dependent(const CapacitatedGraph& g, const XYZPartition& part) {
    std::vector<char> in_x(g.vertex_count(), 0), in_z(g.vertex_count(), 0);
    for (int x : part.x_set) in_x[x] = 1;
    for (int z : part.z_set) in_z[z] = 1;
    for (const auto& [u, v] : g.edges()) {
        if (in_x[u] && in_x[v]) return construct_nash_seeded(g, u);
        if (in_z[u] && in_z[v]) {
            int a = u, b = v;
            if (g.kappa(a) == 0) std::swap(a, b);
            return construct_nash_seeded(g, a, b);
        }
    }
    throw std::logic_error("second_nash_xz_dependent: X u Z is independent");
}

// Bipartite graph with the capacity copies of Y on the left and X on the
// right; matchings saturating the left decide Nash-subgraph uniqueness.
struct CopiesToX {
    std::vector<std::vector<int>> adj;  // copy -> X indices
    std::vector<int> owner;             // copy -> y vertex id
    std::vector<int> x_ids;             // X index -> vertex id
};

CopiesToX build_copies_to_x(const CapacitatedGraph& g, const XYZPartition& part) {
    CopiesToX c;
    c.x_ids = part.x_set;
    std::vector<int> x_index(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(c.x_ids.size()); ++i) x_index[c.x_ids[i]] = i;
    for (int y : part.y_set) {
        std::vector<int> nbrs;
        for (int u : g.neighbors(y))
            if (x_index[u] >= 0) nbrs.push_back(x_index[u]);
        for (int k = 0; k < g.kappa(y); ++k) {
            c.adj.push_back(nbrs);
            c.owner.push_back(y);
        }
    }
    return c;
}

bool augment_skip(const CopiesToX& c, int copy, int forbidden, std::vector<int>& copy_match,
                  std::vector<int>& x_match, std::vector<char>& visited) {
    for (int xi : c.adj[copy]) {
        if (xi == forbidden || visited[xi]) continue;
        visited[xi] = 1;
        if (x_match[xi] < 0 || augment_skip(c, x_match[xi], forbidden, copy_match, x_match, visited)) {
            copy_match[copy] = xi;
            x_match[xi] = copy;
            return true;
        }
    }
    return false;
}

// Matching saturating all copies while avoiding one X column; on failure
// reports the y-vertices whose copies witness the Hall violation.
bool copies_saturate_without(const CopiesToX& c, int forbidden, std::vector<int>* bad_ys) {
    int nc = static_cast<int>(c.adj.size());
    int nx = static_cast<int>(c.x_ids.size());
    std::vector<int> copy_match(nc, -1), x_match(nx, -1);
    std::vector<char> visited(nx, 0);
    int size = 0;
    for (int copy = 0; copy < nc; ++copy) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment_skip(c, copy, forbidden, copy_match, x_match, visited)) ++size;
    }
    if (size == nc) return true;
    if (bad_ys) {
        std::vector<char> in_s(nc, 0), seen(nx, 0);
        std::vector<int> stack;
        for (int copy = 0; copy < nc; ++copy)
            if (copy_match[copy] < 0) {
                in_s[copy] = 1;
                stack.push_back(copy);
            }
        while (!stack.empty()) {
            int copy = stack.back();
            stack.pop_back();
            for (int xi : c.adj[copy]) {
                if (xi == forbidden || seen[xi]) continue;
                seen[xi] = 1;
                int c2 = x_match[xi];
                if (c2 >= 0 && !in_s[c2]) {
                    in_s[c2] = 1;
                    stack.push_back(c2);
                }
            }
        }
        std::set<int> ys;
        for (int copy = 0; copy < nc; ++copy)
            if (in_s[copy]) ys.insert(c.owner[copy]);
        bad_ys->assign(ys.begin(), ys.end());
    }
    return false;
}

}  // namespace

LWResult compute_lw(const CapacitatedGraph& g, const XYZPartition& part,
                    const std::vector<int>& w_set) {
    require_normalized(g, "compute_lw");
    if (w_set.empty()) throw std::invalid_argument("compute_lw: W must be nonempty");
    std::vector<char> allowed(g.vertex_count(), 0);
    for (int y : y_kappa_positive(g, part)) allowed[y] = 1;
    for (int y : w_set) {
        if (y < 0 || y >= g.vertex_count() || !allowed[y])
            throw std::invalid_argument("compute_lw: W must be a subset of Y^{kappa>0}");
    }

    LWResult res;
    res.w_set = w_set;
    std::sort(res.w_set.begin(), res.w_set.end());
    res.w_set.erase(std::unique(res.w_set.begin(), res.w_set.end()), res.w_set.end());
    for (int y : res.w_set) res.w_kappa_size += g.kappa(y);

    WScanContext ctx = make_scan_context(g, part);
    for (int y : res.w_set)
        for (int x : g.neighbors(y))
            if (ctx.thresh[x] >= 0) ++ctx.count[x];
    res.l_set = lw_members(g, ctx);
    return res;
}

bool check_ostar(const CapacitatedGraph& g, int cap) {
    require_normalized(g, "check_ostar");
    XYZPartition part = partition_xyz(g);
    check_cap(y_kappa_positive(g, part).size(), cap, "check_ostar");
    return !find_ostar_violation(g, part).has_value();
}

bool check_mstar(const CapacitatedGraph& g, int cap) {
    require_normalized(g, "check_mstar");
    XYZPartition part = partition_xyz(g);
    check_cap(y_kappa_positive(g, part).size(), cap, "check_mstar");
    return !find_mstar_violation(g, part).has_value();
}

UniquenessVerdict unique_nash(const CapacitatedGraph& g) {
    CapacitatedGraph gn = normalize(g);
    XYZPartition part = partition_xyz(gn);
    std::vector<int> xz = xz_union(part);

    UniquenessVerdict v;
    if (!is_independent(gn, xz)) {
        v.unique = false;
        v.method = "xz-dependent";
        v.witness_subgraph = second_nash_xz_dependent(gn, part);
        return v;
    }

    int z_plus = -1;
    for (int z : part.z_set)
        if (gn.kappa(z) > 0) {
            z_plus = z;
            break;
        }
    if (z_plus >= 0) {
        // Same D-set, different edges: swap the last chosen edge at z for the
        // first unchosen one.
        v.unique = false;
        v.method = "z-repick";
        NashSubgraph alt = *canonical_nash(gn);
        int last_chosen = gn.neighbors(z_plus)[gn.kappa(z_plus) - 1];
        int first_unchosen = gn.neighbors(z_plus)[gn.kappa(z_plus)];
        Edge old_edge{std::min(z_plus, last_chosen), std::max(z_plus, last_chosen)};
        Edge new_edge{std::min(z_plus, first_unchosen), std::max(z_plus, first_unchosen)};
        alt.edges.erase(std::find(alt.edges.begin(), alt.edges.end(), old_edge));
        alt.edges.push_back(new_edge);
        alt.canonicalize();
        v.witness_subgraph = std::move(alt);
        return v;
    }

    // All remaining Z-vertices have capacity zero and contribute no edges, so
    // uniqueness reduces to the matching test over X alone.
    CopiesToX copies = build_copies_to_x(gn, part);
    for (int xi = 0; xi < static_cast<int>(copies.x_ids.size()); ++xi) {
        std::vector<int> bad_ys;
        if (!copies_saturate_without(copies, xi, &bad_ys)) {
            v.unique = false;
            v.method = "aux-matching";
            v.witness_subgraph = second_nash_from_violation(gn, part, bad_ys);
            return v;
        }
    }
    v.unique = true;
    v.method = "aux-matching";
    return v;
}

UniquenessVerdict unique_dset(const CapacitatedGraph& g, const DecideBudget& budget) {
    CapacitatedGraph gn = normalize(g);
    XYZPartition part = partition_xyz(gn);
    std::vector<int> xz = xz_union(part);

    UniquenessVerdict v;
    if (!is_independent(gn, xz)) {
        v.unique = false;
        v.method = "xz-dependent";
        v.witness_dset = second_nash_xz_dependent(gn, part).d_set;
        return v;
    }

    bool all_zero = true, all_one = true;
    for (int u = 0; u < g.vertex_count(); ++u) {
        all_zero = all_zero && g.kappa(u) == 0;
        all_one = all_one && g.kappa(u) == 1;
    }
    if (all_zero) {
        v.unique = true;
        v.method = "kappa0";
        return v;
    }
    if (all_one) {
        // Unit capacities: unique iff every y in Y sees at least two
        // X-vertices (X u Z independence already holds here).
        v.method = "unit-kappa";
        std::vector<char> in_x(gn.vertex_count(), 0);
        for (int x : part.x_set) in_x[x] = 1;
        for (int y : part.y_set) {
            int nx = 0;
            for (int u : gn.neighbors(y))
                if (in_x[u]) ++nx;
            if (nx < 2) {
                v.unique = false;
                v.witness_dset = construct_nash_seeded(gn, y).d_set;
                return v;
            }
        }
        v.unique = true;
        return v;
    }
    if (part.z_set.empty()) {
        UniquenessVerdict nash = unique_nash(gn);
        v.unique = nash.unique;
        v.method = "nash-delegate";
        if (nash.witness_subgraph) v.witness_dset = nash.witness_subgraph->d_set;
        return v;
    }

    std::vector<int> ykp = y_kappa_positive(gn, part);
    if (static_cast<int>(ykp.size()) <= budget.ostar_cap) {
        v.method = "ostar";
        auto viol = find_ostar_violation(gn, part);
        if (!viol) {
            v.unique = true;
            return v;
        }
        v.unique = false;
        v.witness_dset = second_nash_from_violation(gn, part, *viol).d_set;
        return v;
    }
    if (gn.vertex_count() <= budget.enum_vertex_cap) {
        v.method = "enumerate";
        DSetReport rep = enumerate_dsets(gn, 2, budget.enum_vertex_cap);
        if (rep.dsets.size() <= 1) {
            v.unique = true;
            return v;
        }
        v.unique = false;
        for (const auto& d : rep.dsets)
            if (d != xz) {
                v.witness_dset = d;
                break;
            }
        return v;
    }
    throw BudgetExceeded("unique_dset: |Y^{kappa>0}| = " + std::to_string(ykp.size()) +
                         " exceeds the O* cap and n = " + std::to_string(gn.vertex_count()) +
                         " exceeds the enumeration cap");
}

}  // namespace capnash
