#include "wed/catalog.hpp"
#include "wed/errors.hpp"
#include "wed/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace wed;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("spider builds three glued paths") {
    Graph claw = spider(1, 1, 1);
    CHECK(claw.n == 4);
    CHECK(sorted_degrees(claw) == std::vector<int>{1, 1, 1, 3});

    Graph s = spider(1, 2, 3);
    CHECK(s.n == 7);
    CHECK(s.edge_count() == 6);
    CHECK(sorted_degrees(s) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});

    // with two empty legs the spider degenerates to a path
    CHECK(oracle::isomorphic_by_enumeration(spider(0, 0, 4), named("P5").graph));

    CHECK_THROWS_AS(spider(2, 1, 3), invalid_input);
    CHECK_THROWS_AS(spider(-1, 0, 0), invalid_input);
}

TEST_CASE("parametric names build paths, cycles, cliques") {
    Graph p6 = named("P6").graph;
    CHECK(p6.n == 6);
    CHECK(p6.edge_count() == 5);
    CHECK(p6.has_edge(2, 3));
    CHECK(!p6.has_edge(0, 5));

    Graph c5 = named("C5").graph;
    CHECK(c5.n == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.has_edge(4, 0));
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Graph k4 = named("K4").graph;
    CHECK(k4.edge_count() == 6);

    CHECK(named("P1").graph.n == 1);
    CHECK(named("K1").graph.n == 1);
    CHECK_THROWS_AS(named("P0"), invalid_input);
    CHECK_THROWS_AS(named("C2"), invalid_input);
    CHECK_THROWS_AS(named("K0"), invalid_input);
}

TEST_CASE("spider names spell one digit per leg") {
    CHECK(oracle::isomorphic_by_enumeration(named("S123").graph, spider(1, 2, 3)));
    CHECK(oracle::isomorphic_by_enumeration(named("S111").graph, named("claw").graph));
    CHECK_THROWS_AS(named("S12"), invalid_input);   // too short
    CHECK_THROWS_AS(named("S321"), invalid_input);  // legs must be nondecreasing
}

TEST_CASE("compound names take disjoint unions with multipliers") {
    Graph two_p3 = named("2P3").graph;
    CHECK(two_p3.n == 6);
    CHECK(two_p3.edge_count() == 4);
    CHECK(components(two_p3).size() == 2);

    Graph mix = named("K3+P2").graph;
    CHECK(mix.n == 5);
    CHECK(mix.edge_count() == 4);
    CHECK(components(mix).size() == 2);

    Graph trio = named("2P2+K1").graph;
    CHECK(trio.n == 5);
    CHECK(trio.edge_count() == 2);
    CHECK(components(trio).size() == 3);

    CHECK_THROWS_AS(named("0P3"), invalid_input);
    CHECK_THROWS_AS(named(""), invalid_input);
    CHECK_THROWS_AS(named("Q5"), invalid_input);
}

TEST_CASE("fixed catalog graphs have their textbook shapes") {
    CHECK(sorted_degrees(named("paw").graph) == std::vector<int>{1, 2, 2, 3});
    CHECK(sorted_degrees(named("diamond").graph) == std::vector<int>{2, 2, 3, 3});
    CHECK(sorted_degrees(named("bull").graph) == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(sorted_degrees(named("net").graph) == std::vector<int>{1, 1, 1, 3, 3, 3});
    CHECK(sorted_degrees(named("gem").graph) == std::vector<int>{2, 2, 3, 3, 4});
    CHECK(sorted_degrees(named("dart").graph) == std::vector<int>{1, 2, 2, 3, 4});
    CHECK(sorted_degrees(named("butterfly").graph) == std::vector<int>{2, 2, 2, 2, 4});
    CHECK(sorted_degrees(named("H2").graph) == std::vector<int>{1, 1, 2, 2, 4});
    CHECK(sorted_degrees(named("H3").graph) == std::vector<int>{2, 2, 2, 4, 4});
    CHECK(sorted_degrees(named("H4").graph) == std::vector<int>{3, 3, 4, 4, 4});

    CHECK(oracle::isomorphic_by_enumeration(named("H1").graph, named("K1_4").graph));
    CHECK(oracle::isomorphic_by_enumeration(named("chair").graph, spider(1, 1, 2)));

    // the complement pairs: co_gem is P4 plus an isolated vertex
    Graph co_gem = named("co_gem").graph;
    CHECK(co_gem.edge_count() == 3);
    CHECK(components(co_gem).size() == 2);
    CHECK(oracle::isomorphic_by_enumeration(named("co_P").graph, complement(named("P").graph)));

    Graph banner = named("P").graph;
    CHECK(sorted_degrees(banner) == std::vector<int>{1, 2, 2, 2, 3});
}

TEST_CASE("the eight vertex blocker contains a gem") {
    Graph xg = named("extended_gem").graph;
    CHECK(xg.n == 8);
    CHECK(xg.edge_count() == 10);
    CHECK(oracle::contains_induced_by_enumeration(xg, named("gem").graph));
}

TEST_CASE("every listed name resolves and the list is sorted") {
    auto names = catalog_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::find(names.begin(), names.end(), "net") != names.end());
    CHECK(std::find(names.begin(), names.end(), "extended_gem") != names.end());
    for (const auto& n : names) {
        NamedGraph ng = named(n);
        CHECK(ng.graph.n > 0);
        CHECK((ng.source == "text-defined" || ng.source == "derived-from-proof"));
    }
}
