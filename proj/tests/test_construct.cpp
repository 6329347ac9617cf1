#include <doctest.h>

#include <random>

#include "capnash/construct.hpp"
#include "oracles.hpp"

using namespace capnash;

TEST_CASE("construct_nash on small shapes") {
    // single vertex, kappa 0
    NashSubgraph h = construct_nash(CapacitatedGraph(1, {}, {0}));
    CHECK(h.d_set == std::vector<int>{0});
    CHECK(h.p_set.empty());

    // star K_{1,3} with centre 0: lowest-id leaf peels first, the remaining
    // leaves top up into the centre
    CapacitatedGraph star(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 1, 1, 1});
    h = construct_nash(star);
    CHECK(h.d_set == std::vector<int>{1, 2, 3});
    CHECK(h.p_set == std::vector<int>{0});
    CHECK(h.edges == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(validate_nash(star, h));

    // K3 with kappa 2: star at vertex 0 consumes everything
    auto k3 = oracles::complete_graph(3, 2);
    h = construct_nash(k3);
    CHECK(h.d_set == std::vector<int>{0});
    CHECK(h.p_set == std::vector<int>{1, 2});
    CHECK(h.edges == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("construct_nash output always validates") {
    std::mt19937 rng(57);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + trial % 24;
        auto g = oracles::with_random_kappa(rng, oracles::random_gnp(rng, n, 0.3));
        NashSubgraph h = construct_nash(g);
        CHECK(validate_nash(g, h));
    }
    // empty graph is fine too
    CHECK(validate_nash(CapacitatedGraph(0, {}, {}), construct_nash(CapacitatedGraph(0, {}, {}))));
}

TEST_CASE("construct_nash_seeded on small shapes") {
    auto k3 = oracles::complete_graph(3, 2);
    NashSubgraph h = construct_nash_seeded(k3, 1);
    CHECK(validate_nash(k3, h));
    CHECK(std::find(h.d_set.begin(), h.d_set.end(), 1) != h.d_set.end());
    // N(1) n X = {0, 2} all land in P
    CHECK(h.p_set == std::vector<int>{0, 2});

    CapacitatedGraph path(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1});
    h = construct_nash_seeded(path, 1);
    CHECK(validate_nash(path, h));
    CHECK(std::find(h.d_set.begin(), h.d_set.end(), 1) != h.d_set.end());
    CHECK(std::find(h.p_set.begin(), h.p_set.end(), 0) != h.p_set.end());

    // strict-inequality precondition for the w form
    CHECK_THROWS_AS(construct_nash_seeded(path, 1, 2), std::invalid_argument);
}

TEST_CASE("construct_nash_seeded postconditions on random graphs") {
    std::mt19937 rng(67);
    int tried = 0;
    while (tried < 300) {
        auto g = normalize(oracles::with_random_kappa(rng, oracles::random_gnp(rng, 2 + tried % 10, 0.4)));
        XYZPartition part = partition_xyz(g);
        std::vector<char> in_x(g.vertex_count(), 0);
        for (int x : part.x_set) in_x[x] = 1;
        for (int u = 0; u < g.vertex_count(); ++u) {
            std::vector<int> xn;
            for (int v : g.neighbors(u))
                if (in_x[v]) xn.push_back(v);
            if (static_cast<int>(xn.size()) > g.kappa(u)) continue;
            ++tried;
            NashSubgraph h = construct_nash_seeded(g, u);
            CHECK(validate_nash(g, h));
            CHECK(std::binary_search(h.d_set.begin(), h.d_set.end(), u));
            for (int x : xn) CHECK(std::binary_search(h.p_set.begin(), h.p_set.end(), x));

            // w form whenever some non-X neighbour exists and capacity is slack
            if (static_cast<int>(xn.size()) < g.kappa(u)) {
                for (int v : g.neighbors(u))
                    if (!in_x[v]) {
                        NashSubgraph hw = construct_nash_seeded(g, u, v);
                        CHECK(validate_nash(g, hw));
                        CHECK(std::binary_search(hw.p_set.begin(), hw.p_set.end(), v));
                        break;
                    }
            }
        }
    }
}

TEST_CASE("canonical_nash on small shapes") {
    CapacitatedGraph star(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 1, 1, 1});
    auto h = canonical_nash(star);
    REQUIRE(h);
    CHECK(h->d_set == std::vector<int>{1, 2, 3});
    CHECK(h->p_set == std::vector<int>{0});
    CHECK(validate_nash(star, *h));

    CHECK_FALSE(canonical_nash(oracles::complete_graph(3, 2)));

    CapacitatedGraph path(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1});
    h = canonical_nash(path);
    REQUIRE(h);
    CHECK(h->d_set == std::vector<int>{0, 3});
    CHECK(h->p_set == std::vector<int>{1, 2});
    CHECK(h->edges == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("canonical_nash returns none exactly when X u Z is dependent") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = normalize(oracles::with_random_kappa(rng, oracles::random_gnp(rng, 1 + trial % 9, 0.35)));
        XYZPartition part = partition_xyz(g);
        std::vector<int> xz = part.x_set;
        xz.insert(xz.end(), part.z_set.begin(), part.z_set.end());
        auto h = canonical_nash(g);
        CHECK(h.has_value() == is_independent(g, xz));
        if (h) CHECK(validate_nash(g, *h));
    }
}
