#include "wed/catalog.hpp"
#include "wed/chordal.hpp"
#include "wed/errors.hpp"
#include "wed/generators.hpp"
#include "wed/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using namespace wed;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) e.emplace_back(u, v);
    return from_edge_list(n, e);
}

bool valid_hole(const Graph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 4) return false;
    std::set<int> seen(cyc.begin(), cyc.end());
    if (seen.size() != cyc.size()) return false;
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

} // namespace

TEST_CASE("lex bfs emits a permutation and positions invert it") {
    Graph g = random_graph(9, 0.4, 11);
    EliminationOrder eo = lex_bfs(g);
    std::vector<int> sorted = eo.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(g.n);
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted == iota);
    for (int i = 0; i < g.n; ++i) CHECK(eo.position[eo.order[i]] == i);
}

TEST_CASE("perfect elimination recognizes trees and cliques, rejects C4") {
    Graph tree = from_edge_list(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    CHECK(is_peo(tree, lex_bfs(tree)));
    Graph k5 = named("K5").graph;
    CHECK(is_peo(k5, lex_bfs(k5)));
    Graph c4 = named("C4").graph;
    CHECK(!is_peo(c4, lex_bfs(c4)));

    // a concrete bad order on a chordal graph: eliminating the middle of P3
    // first leaves its two later neighbors nonadjacent
    Graph p3 = named("P3").graph;
    EliminationOrder bad{{1, 0, 2}, {}};
    bad.position.assign(3, 0);
    for (int i = 0; i < 3; ++i) bad.position[bad.order[i]] = i;
    CHECK(!is_peo(p3, bad));
    CHECK(is_peo(p3, lex_bfs(p3)));
}

TEST_CASE("chordality verdicts on known graphs") {
    CHECK(is_chordal(named("K1").graph).chordal);
    CHECK(is_chordal(from_edge_list(0, {})).chordal);
    CHECK(is_chordal(named("P7").graph).chordal);
    CHECK(is_chordal(named("gem").graph).chordal);
    CHECK(is_chordal(named("net").graph).chordal);
    CHECK(!is_chordal(named("C4").graph).chordal);
    CHECK(!is_chordal(named("C7").graph).chordal);

    // the whole cycle is its own certificate
    auto r = is_chordal(named("C6").graph);
    REQUIRE(r.hole.has_value());
    CHECK(r.hole->size() == 6);
    CHECK(valid_hole(named("C6").graph, *r.hole));
}

TEST_CASE("chordality agrees with exhaustive hole search on random graphs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);
        double p = 0.25 + 0.1 * static_cast<double>(seed % 6);
        Graph g = random_graph(n, p, 1000 + seed);
        bool holed = oracle::has_hole_by_enumeration(g);
        ChordalityResult r = is_chordal(g);
        CHECK(r.chordal == !holed);
        if (!r.chordal) {
            REQUIRE(r.hole.has_value());
            CHECK(valid_hole(g, *r.hole));
        } else {
            CHECK(is_peo(g, r.order));
            CHECK(!find_hole(g).has_value());
        }
    }
}

TEST_CASE("generated chordal graphs always pass and their order is perfect") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_chordal(14, 0.4, seed);
        ChordalityResult r = is_chordal(g, false);
        CHECK(r.chordal);
        CHECK(is_peo(g, r.order));
    }
}

TEST_CASE("weighted independent set on a path picks the heavy alternation") {
    Graph p4 = named("P4").graph;
    MwisResult r = mwis_chordal(p4, {3, 5, 4, 3});
    CHECK(r.weight == 8);
    CHECK(r.set == std::vector<int>{1, 3});
}

TEST_CASE("independent set ignores nonpositive weights entirely") {
    Graph p4 = named("P4").graph;
    MwisResult r = mwis_chordal(p4, {-3, -1, -4, 0});
    CHECK(r.weight == 0);
    CHECK(r.set.empty());

    MwisResult mixed = mwis_chordal(p4, {-2, 7, -2, 1});
    CHECK(mixed.weight == 8);
    CHECK(mixed.set == std::vector<int>{1, 3});

    MwisResult empty = mwis_chordal(from_edge_list(0, {}), {});
    CHECK(empty.weight == 0);
}

TEST_CASE("independent set requires a chordal input") {
    CHECK_THROWS_AS(mwis_chordal(named("C5").graph, {1, 1, 1, 1, 1}), not_chordal_error);
}

TEST_CASE("independent set matches exhaustive search on random chordal graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 3 + static_cast<int>(seed % 10);
        Graph g = random_chordal(n, 0.5, 2000 + seed);
        Rng rng(3000 + seed);
        std::vector<long long> wl;
        std::vector<ExactWeight> we;
        for (int v = 0; v < n; ++v) {
            long long x = rng.in_range(-9, 9);
            wl.push_back(x);
            we.push_back(ExactWeight(static_cast<long>(x)));
        }
        auto [oset, ow] = oracle::mwis_by_enumeration(g, wl);
        MwisResult r = mwis_chordal(g, we);
        CHECK(r.weight == ExactWeight(static_cast<long>(ow)));
        // independence of the returned set, and its weight adds up
        ExactWeight total = 0;
        for (std::size_t i = 0; i < r.set.size(); ++i) {
            total += we[r.set[i]];
            for (std::size_t j = i + 1; j < r.set.size(); ++j)
                CHECK(!g.has_edge(r.set[i], r.set[j]));
        }
        CHECK(total == r.weight);
    }
}
