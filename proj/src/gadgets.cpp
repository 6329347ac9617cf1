#include "capnash/gadgets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace capnash {

namespace {

void require_distinct_vars(const CnfFormula& f) {
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        std::vector<int> vars;
        for (int lit : f.clauses[j]) vars.push_back(lit > 0 ? lit : -lit);
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                        " repeats a variable; the reduction needs simple graphs");
    }
}

// ---- k = 2 layout -------------------------------------------------------
// Ids, in order: w_i/wbar_i pairs, ring vertices r_i, one subdivision vertex
// per ring edge (in sorted edge order), the guard stars Z_i, the hub q1/q2,
// the five x* vertices, then clause vertices.

struct K2Layout {
    int n = 0;  // padded variable count, even
    int m = 0;
    std::vector<Edge> ring_edges;  // edges of the un-subdivided ring graph

    int w(int i) const { return 2 * i; }
    int wbar(int i) const { return 2 * i + 1; }
    int r(int i) const { return 2 * n + i; }
    int sub_base() const { return 3 * n; }
    int z(int i, int t) const { return sub_base() + static_cast<int>(ring_edges.size()) + 5 * i + t; }
    int q1() const { return sub_base() + static_cast<int>(ring_edges.size()) + 5 * n; }
    int q2() const { return q1() + 1; }
    int xstar(int t) const { return q2() + 1 + t; }
    int clause(int j) const { return q2() + 6 + j; }
    int total() const { return clause(m); }
};

K2Layout make_k2_layout(const CnfFormula& padded) {
    K2Layout lay;
    lay.n = padded.variable_count;
    lay.m = static_cast<int>(padded.clauses.size());
    for (int t = 0; t < lay.n / 2; ++t) {
        int a = 2 * t, b = 2 * t + 1;
        lay.ring_edges.push_back({lay.w(a), lay.w(b)});
        lay.ring_edges.push_back({lay.w(a), lay.wbar(b)});
        lay.ring_edges.push_back({lay.wbar(a), lay.w(b)});
        lay.ring_edges.push_back({lay.wbar(a), lay.wbar(b)});
        lay.ring_edges.push_back({lay.r(2 * t + 1), lay.r((2 * t + 2) % lay.n)});
    }
    for (int i = 0; i < lay.n; ++i) {
        lay.ring_edges.push_back({lay.r(i), lay.w(i)});
        lay.ring_edges.push_back({lay.r(i), lay.wbar(i)});
    }
    for (auto& [u, v] : lay.ring_edges)
        if (u > v) std::swap(u, v);
    std::sort(lay.ring_edges.begin(), lay.ring_edges.end());
    return lay;
}

int k2_sub_vertex(const K2Layout& lay, int a, int b) {
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(lay.ring_edges.begin(), lay.ring_edges.end(), e);
    return lay.sub_base() + static_cast<int>(it - lay.ring_edges.begin());
}

// ---- k >= 3 layout ------------------------------------------------------
// One block of (k+1)^2 ids per variable: w/wbar, X_i, X_i', Y_i, Z_i. Then
// the global X*, Y*, y' and the clause vertices.

struct KLayout {
    int k = 0;
    int n = 0;  // widened variable count
    int m = 0;

    int half() const { return k * (k - 1) / 2; }
    int block() const { return (k + 1) * (k + 1); }
    int w(int i) const { return i * block(); }
    int wbar(int i) const { return i * block() + 1; }
    int x(int i, int t) const { return i * block() + 2 + t; }
    int xprime(int i, int t) const { return i * block() + 2 + half() + t; }
    int y(int i, int t) const { return i * block() + 2 + 2 * half() + t; }
    int z(int i, int t) const { return i * block() + 2 * half() + k + t; }
    int global_base() const { return n * block(); }
    int xstar(int t) const { return global_base() + t; }
    int ystar(int t) const { return global_base() + k * k + 1 + t; }
    int yprime() const { return global_base() + k * k + k; }
    int clause(int j) const { return global_base() + k * k + k + 1 + j; }
    int total() const { return clause(m); }
};

}  // namespace

GadgetArtifact gadget_k2(const CnfFormula& f) {
    for (const auto& c : f.clauses)
        if (c.size() != 3) throw std::invalid_argument("gadget_k2 requires width-3 clauses");
    require_distinct_vars(f);

    GadgetArtifact art;
    art.k = 2;
    art.padded_formula = pad_even_variables(f);
    K2Layout lay = make_k2_layout(art.padded_formula);

    std::vector<Edge> edges;
    art.region.assign(lay.total(), "");
    for (int i = 0; i < lay.n; ++i) {
        art.region[lay.w(i)] = "W";
        art.region[lay.wbar(i)] = "W";
        art.region[lay.r(i)] = "r";
        art.var_vertices.push_back({lay.w(i), lay.wbar(i)});
    }
    for (int e = 0; e < static_cast<int>(lay.ring_edges.size()); ++e) {
        art.region[lay.sub_base() + e] = "U";
        edges.push_back({lay.ring_edges[e].first, lay.sub_base() + e});
        edges.push_back({lay.ring_edges[e].second, lay.sub_base() + e});
    }
    for (int i = 0; i < lay.n; ++i)
        for (int t = 0; t < 5; ++t) {
            art.region[lay.z(i, t)] = "Z";
            edges.push_back({lay.z(i, t), lay.w(i)});
            edges.push_back({lay.z(i, t), lay.wbar(i)});
            edges.push_back({lay.z(i, t), lay.q1()});
        }
    art.region[lay.q1()] = "Q";
    art.region[lay.q2()] = "Q";
    for (int t = 0; t < 5; ++t) {
        art.region[lay.xstar(t)] = "X*";
        edges.push_back({lay.xstar(t), lay.q1()});
        edges.push_back({lay.xstar(t), lay.q2()});
    }
    for (int j = 0; j < lay.m; ++j) {
        art.region[lay.clause(j)] = "C";
        art.clause_vertices.push_back(lay.clause(j));
        for (int lit : art.padded_formula.clauses[j]) {
            int i = (lit > 0 ? lit : -lit) - 1;
            edges.push_back({lay.clause(j), lit > 0 ? lay.w(i) : lay.wbar(i)});
        }
        edges.push_back({lay.clause(j), lay.q1()});
    }

    art.graph = CapacitatedGraph(lay.total(), std::move(edges), std::vector<int>(lay.total(), 2));
    return art;
}

GadgetArtifact gadget_k(const CnfFormula& f, int k) {
    if (k < 3) throw std::invalid_argument("gadget_k requires k >= 3 (use gadget_k2 for k = 2)");
    require_distinct_vars(f);

    GadgetArtifact art;
    art.k = k;
    art.padded_formula = widen_to_k_of_k2(f, k);
    KLayout lay{k, art.padded_formula.variable_count,
                static_cast<int>(art.padded_formula.clauses.size())};

    std::vector<Edge> edges;
    art.region.assign(lay.total(), "");
    for (int i = 0; i < lay.n; ++i) {
        art.region[lay.w(i)] = "W";
        art.region[lay.wbar(i)] = "W";
        art.var_vertices.push_back({lay.w(i), lay.wbar(i)});
        for (int t = 0; t < lay.half(); ++t) {
            art.region[lay.x(i, t)] = "X";
            art.region[lay.xprime(i, t)] = "X'";
            edges.push_back({lay.w(i), lay.x(i, t)});
            edges.push_back({lay.wbar(i), lay.x(i, t)});
            edges.push_back({lay.xprime(i, t), lay.w((i + 1) % lay.n)});
            edges.push_back({lay.xprime(i, t), lay.wbar((i + 1) % lay.n)});
        }
        for (int t = 0; t < k - 2; ++t) {
            art.region[lay.y(i, t)] = "Y";
            for (int s = 0; s < lay.half(); ++s) {
                edges.push_back({lay.y(i, t), lay.x(i, s)});
                edges.push_back({lay.y(i, t), lay.xprime(i, s)});
            }
        }
        for (int t = 0; t < 2 * k + 1; ++t) {
            art.region[lay.z(i, t)] = "Z";
            edges.push_back({lay.z(i, t), lay.w(i)});
            edges.push_back({lay.z(i, t), lay.wbar(i)});
            for (int s = 0; s < k - 1; ++s) edges.push_back({lay.z(i, t), lay.ystar(s)});
        }
    }
    for (int t = 0; t < k * k + 1; ++t) {
        art.region[lay.xstar(t)] = "X*";
        edges.push_back({lay.xstar(t), lay.yprime()});
        for (int s = 0; s < k - 1; ++s) edges.push_back({lay.xstar(t), lay.ystar(s)});
    }
    for (int s = 0; s < k - 1; ++s) art.region[lay.ystar(s)] = "Y*";
    art.region[lay.yprime()] = "y'";
    for (int j = 0; j < lay.m; ++j) {
        art.region[lay.clause(j)] = "C";
        art.clause_vertices.push_back(lay.clause(j));
        for (int lit : art.padded_formula.clauses[j]) {
            int i = (lit > 0 ? lit : -lit) - 1;
            edges.push_back({lay.clause(j), lit > 0 ? lay.w(i) : lay.wbar(i)});
        }
    }

    art.graph = CapacitatedGraph(lay.total(), std::move(edges), std::vector<int>(lay.total(), k));
    return art;
}

namespace {

NashSubgraph assignment_witness_k2(const GadgetArtifact& a, const std::vector<bool>& assignment) {
    K2Layout lay = make_k2_layout(a.padded_formula);
    int n = lay.n;

    auto p_side = [&](int i) { return assignment[i] ? lay.w(i) : lay.wbar(i); };
    auto d_side = [&](int i) { return assignment[i] ? lay.wbar(i) : lay.w(i); };
    auto sub = [&](int x, int y) { return k2_sub_vertex(lay, x, y); };

    NashSubgraph h;
    std::vector<char> in_p(lay.total(), 0);
    in_p[lay.q1()] = in_p[lay.q2()] = 1;
    for (int i = 0; i < n; ++i) in_p[p_side(i)] = 1;
    for (int e = 0; e < static_cast<int>(lay.ring_edges.size()); ++e) in_p[lay.sub_base() + e] = 1;

    for (int t = 0; t < 5; ++t) {
        h.edges.push_back({lay.xstar(t), lay.q1()});
        h.edges.push_back({lay.xstar(t), lay.q2()});
    }
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < 5; ++t) {
            h.edges.push_back({lay.z(i, t), lay.q1()});
            h.edges.push_back({lay.z(i, t), p_side(i)});
        }
    for (int j = 0; j < lay.m; ++j) {
        h.edges.push_back({lay.clause(j), lay.q1()});
        for (int lit : a.padded_formula.clauses[j]) {
            int i = (lit > 0 ? lit : -lit) - 1;
            if ((lit > 0) == assignment[i]) {
                h.edges.push_back({lay.clause(j), p_side(i)});
                break;
            }
        }
    }

    // Per variable pair: one subdivision vertex moves to D (the one between
    // the two P-side vertices) and the ring re-wires around it.
    for (int t = 0; t < n / 2; ++t) {
        int va = 2 * t, vb = 2 * t + 1;
        int r_first = lay.r(2 * t), r_second = lay.r(2 * t + 1), r_next = lay.r((2 * t + 2) % n);
        int pa = p_side(va), da = d_side(va), pb = p_side(vb), db = d_side(vb);
        int promoted = sub(pa, pb);
        in_p[promoted] = 0;

        h.edges.push_back({r_first, sub(r_first, lay.w(va))});
        h.edges.push_back({r_first, sub(r_first, lay.wbar(va))});
        h.edges.push_back({da, sub(da, lay.w(vb))});
        h.edges.push_back({da, sub(da, lay.wbar(vb))});
        h.edges.push_back({db, sub(pa, db)});
        h.edges.push_back({db, sub(db, r_second)});
        h.edges.push_back({promoted, pa});
        h.edges.push_back({promoted, pb});
        h.edges.push_back({r_second, sub(pb, r_second)});
        h.edges.push_back({r_second, sub(r_second, r_next)});
    }

    for (int v = 0; v < lay.total(); ++v) (in_p[v] ? h.p_set : h.d_set).push_back(v);
    h.canonicalize();
    return h;
}

NashSubgraph assignment_witness_k(const GadgetArtifact& a, const std::vector<bool>& assignment) {
    int k = a.k;
    KLayout lay{k, a.padded_formula.variable_count,
                static_cast<int>(a.padded_formula.clauses.size())};

    auto p_side = [&](int i) { return assignment[i] ? lay.w(i) : lay.wbar(i); };
    auto d_side = [&](int i) { return assignment[i] ? lay.wbar(i) : lay.w(i); };

    NashSubgraph h;
    std::vector<char> in_p(lay.total(), 0);
    in_p[lay.yprime()] = 1;
    for (int s = 0; s < k - 1; ++s) in_p[lay.ystar(s)] = 1;
    for (int i = 0; i < lay.n; ++i) {
        in_p[p_side(i)] = 1;
        for (int t = 0; t < lay.half(); ++t) in_p[lay.x(i, t)] = in_p[lay.xprime(i, t)] = 1;
    }

    for (int t = 0; t < k * k + 1; ++t) {
        h.edges.push_back({lay.xstar(t), lay.yprime()});
        for (int s = 0; s < k - 1; ++s) h.edges.push_back({lay.xstar(t), lay.ystar(s)});
    }
    for (int i = 0; i < lay.n; ++i) {
        for (int t = 0; t < 2 * k + 1; ++t) {
            h.edges.push_back({lay.z(i, t), p_side(i)});
            for (int s = 0; s < k - 1; ++s) h.edges.push_back({lay.z(i, t), lay.ystar(s)});
        }
        // The false-side w covers the first k vertices of X_i; Y_i covers the
        // rest of X_i and all of X_i', dealt round-robin so every Y_i vertex
        // carries k edges and every target receives exactly one.
        for (int t = 0; t < k; ++t) h.edges.push_back({d_side(i), lay.x(i, t)});
        std::vector<int> targets;
        for (int t = k; t < lay.half(); ++t) targets.push_back(lay.x(i, t));
        for (int t = 0; t < lay.half(); ++t) targets.push_back(lay.xprime(i, t));
        for (int j = 0; j < static_cast<int>(targets.size()); ++j)
            h.edges.push_back({lay.y(i, j % (k - 2)), targets[j]});
    }
    for (int j = 0; j < lay.m; ++j) {
        int wired = 0;
        for (int lit : a.padded_formula.clauses[j]) {
            if (wired == k) break;
            int i = (lit > 0 ? lit : -lit) - 1;
            if ((lit > 0) == assignment[i]) {
                h.edges.push_back({lay.clause(j), p_side(i)});
                ++wired;
            }
        }
    }

    for (int v = 0; v < lay.total(); ++v) (in_p[v] ? h.p_set : h.d_set).push_back(v);
    h.canonicalize();
    return h;
}

}  // namespace

NashSubgraph assignment_witness(const GadgetArtifact& a, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != a.padded_formula.variable_count)
        throw std::invalid_argument("assignment must cover the encoded formula's variables");
    int required = a.k == 2 ? 1 : a.k;
    int failing = -1;
    if (!assignment_satisfies(a.padded_formula, assignment, required, &failing))
        throw std::invalid_argument("assignment leaves clause " + std::to_string(failing + 1) +
                                    " with fewer than " + std::to_string(required) +
                                    " true literals");
    return a.k == 2 ? assignment_witness_k2(a, assignment) : assignment_witness_k(a, assignment);
}

std::string write_mapping_text(const GadgetArtifact& a) {
    std::ostringstream out;
    for (size_t i = 0; i < a.var_vertices.size(); ++i)
        out << "var " << i + 1 << ' ' << a.var_vertices[i].first << ' '
            << a.var_vertices[i].second << '\n';
    for (size_t j = 0; j < a.clause_vertices.size(); ++j)
        out << "clause " << j + 1 << ' ' << a.clause_vertices[j] << '\n';
    for (size_t v = 0; v < a.region.size(); ++v) out << "region " << v << ' ' << a.region[v] << '\n';
    return out.str();
}

}  // namespace capnash
