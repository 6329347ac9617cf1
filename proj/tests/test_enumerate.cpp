#include <doctest.h>

#include <random>

#include "capnash/enumerate.hpp"
#include "oracles.hpp"

using namespace capnash;

TEST_CASE("enumerate_dsets on the complete-graph family") {
    // K3 with kappa 2: exactly the three singletons
    DSetReport rep = enumerate_dsets(oracles::complete_graph(3, 2));
    CHECK(rep.dsets == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(rep.complete);

    // K6 with kappa 2: all subsets of size 2..4, fifty in total
    rep = enumerate_dsets(oracles::complete_graph(6, 2));
    CHECK(rep.dsets.size() == 50);
    for (const auto& d : rep.dsets) {
        CHECK(d.size() >= 2);
        CHECK(d.size() <= 4);
    }
    CHECK(count_dsets(oracles::complete_graph(6, 2)) == 50);

    // single vertex, kappa 0
    rep = enumerate_dsets(CapacitatedGraph(1, {}, {0}));
    CHECK(rep.dsets == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("K_{3n} family: sizes n..3n-2 exactly") {
    for (int n = 1; n <= 2; ++n) {
        auto g = oracles::complete_graph(3 * n, 2);
        DSetReport rep = enumerate_dsets(g);
        for (const auto& d : rep.dsets) {
            CHECK(static_cast<int>(d.size()) >= n);
            CHECK(static_cast<int>(d.size()) <= 3 * n - 2);
        }
        unsigned long long expected = 0;
        for (unsigned mask = 1; mask < (1u << (3 * n)); ++mask) {
            int p = std::popcount(mask);
            if (p >= n && p <= 3 * n - 2) ++expected;
        }
        CHECK(rep.dsets.size() == expected);
    }
}

TEST_CASE("enumerate matches the naive oracle and stays sorted") {
    std::mt19937 rng(211);
    int done = 0;
    while (done < 200) {
        auto g = oracles::with_random_kappa(rng, oracles::random_gnp(rng, 1 + done % 7, 0.4));
        if (g.edge_count() > 12) continue;
        ++done;
        DSetReport rep = enumerate_dsets(g);
        CHECK(rep.complete);
        CHECK(rep.dsets == oracles::naive_enumerate_dsets(g));
        CHECK(std::is_sorted(rep.dsets.begin(), rep.dsets.end()));
    }
}

TEST_CASE("limit truncates in lexicographic order") {
    auto g = oracles::complete_graph(6, 2);
    DSetReport all = enumerate_dsets(g);
    DSetReport first10 = enumerate_dsets(g, 10);
    CHECK_FALSE(first10.complete);
    CHECK(first10.dsets == std::vector<std::vector<int>>(all.dsets.begin(), all.dsets.begin() + 10));

    DSetReport exact = enumerate_dsets(g, 50);
    CHECK(exact.complete);
    CHECK(exact.dsets.size() == 50);
}

TEST_CASE("sharded scan matches the sequential one") {
    auto g = oracles::complete_graph(6, 2);
    DSetReport seq = enumerate_dsets(g);
    DSetReport par = enumerate_dsets(g, std::nullopt, 24, 4);
    CHECK(par.dsets == seq.dsets);
    CHECK(par.explored == seq.explored);
}

TEST_CASE("vertex cap is enforced") {
    auto g = oracles::complete_graph(6, 2);
    CHECK_THROWS_AS(enumerate_dsets(g, std::nullopt, 5), BudgetExceeded);
}

TEST_CASE("pruned enumerator on small shapes") {
    CapacitatedGraph star(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 1, 1, 1});
    DSetReport rep = enumerate_dsets_pruned(star, 10.0);
    CHECK(rep.complete);
    CHECK(rep.dsets == std::vector<std::vector<int>>{{1, 2, 3}});

    rep = enumerate_dsets_pruned(oracles::complete_graph(3, 2), 10.0);
    CHECK(rep.dsets == std::vector<std::vector<int>>{{0}, {1}, {2}});

    // path 0-1-2-3, kappa 1: brute force finds four D-sets ({0,2} works via
    // E' = {01, 23}, and symmetrically)
    CapacitatedGraph path(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1});
    rep = enumerate_dsets_pruned(path, 10.0);
    CHECK(rep.dsets == oracles::naive_enumerate_dsets(path));
    CHECK(rep.dsets == std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("pruned and exhaustive enumerators agree") {
    std::mt19937 rng(223);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracles::with_random_kappa(rng, oracles::random_gnp(rng, 1 + trial % 9, 0.35));
        DSetReport fast = enumerate_dsets_pruned(g, 30.0);
        REQUIRE(fast.complete);
        CHECK(fast.dsets == enumerate_dsets(g).dsets);
    }
}

TEST_CASE("empty graph has the vacuous D-set") {
    CapacitatedGraph g(0, {}, {});
    CHECK(enumerate_dsets(g).dsets == std::vector<std::vector<int>>{{}});
    CHECK(enumerate_dsets_pruned(g, 1.0).dsets == std::vector<std::vector<int>>{{}});
    CHECK(count_dsets(g) == 1);
}

TEST_CASE("edgeless graph with zero capacities has exactly one D-set") {
    CapacitatedGraph g(3, {}, {0, 0, 0});
    CHECK(count_dsets(g) == 1);
    CHECK(enumerate_dsets(g).dsets == std::vector<std::vector<int>>{{0, 1, 2}});
}
