#include <doctest.h>

#include <random>

#include "eppa/oracle.hpp"
#include "eppa/switching.hpp"
#include "test_util.hpp"

using namespace eppa;
using namespace eppa::testutil;

TEST_CASE("seidel_switch basics") {
    CHECK(seidel_switch(path3(), {1}) == graph_of(3, {}));
    CHECK(seidel_switch(triangle(), {}) == triangle());
    CHECK(seidel_switch(triangle(), {0, 1, 2}) == triangle());
}

TEST_CASE("seidel_switch is an involution and commutes to symmetric difference") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g;
        g.n = n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.edges.insert({u, v});
        std::set<int> s, s2;
        for (int v = 0; v < n; ++v) {
            if (rng() & 1) s.insert(v);
            if (rng() & 1) s2.insert(v);
        }
        CHECK(seidel_switch(seidel_switch(g, s), s) == g);
        std::set<int> sym;
        for (int v = 0; v < n; ++v)
            if (s.count(v) != s2.count(v)) sym.insert(v);
        CHECK(seidel_switch(seidel_switch(g, s), s2) == seidel_switch(g, sym));
        CHECK(associated_two_graph(seidel_switch(g, s)) == associated_two_graph(g));
    }
}

TEST_CASE("associated_two_graph odd-edge rule") {
    CHECK(associated_two_graph(triangle()) == TwoGraph{3, {make_triple(0, 1, 2)}});
    CHECK(associated_two_graph(path3()) == TwoGraph{3, {}});
    CHECK(associated_two_graph(graph_of(3, {{0, 1}})) == TwoGraph{3, {make_triple(0, 1, 2)}});
}

TEST_CASE("find_switch_set canonical solutions") {
    Graph edge01 = graph_of(2, {{0, 1}});
    Graph empty2 = graph_of(2, {});
    PartialMap id{{0, 1}, {0, 1}, StructureKind::graph};

    auto s = find_switch_set(edge01, empty2, id);
    REQUIRE(s.has_value());
    CHECK(*s == std::set<int>{1}); // minimal vertex 0 unswitched

    auto s2 = find_switch_set(edge01, edge01, id);
    REQUIRE(s2.has_value());
    CHECK(s2->empty());

    // T(triangle) has a triple, T(empty) does not: no switch set exists
    CHECK_FALSE(find_switch_set(triangle(), graph_of(3, {}), {{0, 1, 2}, {0, 1, 2}}).has_value());
}

TEST_CASE("find_switch_set agrees with exhaustive subset search") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 6;
        Graph g;
        g.n = n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.edges.insert({u, v});
        std::set<int> s0;
        for (int v = 0; v < n; ++v)
            if (rng() & 1) s0.insert(v);
        Graph h = seidel_switch(g, s0);
        PartialMap id{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}, StructureKind::graph};
        auto s = find_switch_set(g, h, id);
        REQUIRE(s.has_value());
        CHECK(seidel_switch(g, *s) == h);
        CHECK_FALSE(s->count(0)); // canonical: vertex 0 unswitched
    }
}

TEST_CASE("is_switching_isomorphism matches the two-graph characterization") {
    for (const Graph& g : oracle::enumerate_graphs(4)) {
        for (const Graph& h : {seidel_switch(g, {0, 2}), graph_of(4, {{0, 1}})}) {
            for (const auto& f : oracle::all_partial_isomorphisms(graph_of(4, {}), 4)) {
                PartialMap m{f.dom, f.img, StructureKind::graph};
                bool via_switch = is_switching_isomorphism(g, h, m);
                // independent check: f must carry triples of T(g) onto T(h)
                TwoGraph tg = associated_two_graph(g), th = associated_two_graph(h);
                PartialMap tm{f.dom, f.img, StructureKind::two_graph};
                CHECK(via_switch == is_partial_isomorphism(tg, th, tm));
            }
        }
    }
}

TEST_CASE("labeled two-graph counts via switching classes and via parity filter") {
    std::set<TwoGraph> from_graphs;
    for (const Graph& g : oracle::enumerate_graphs(4)) from_graphs.insert(associated_two_graph(g));
    CHECK(from_graphs.size() == 8);
    CHECK(oracle::enumerate_two_graphs(4).size() == 8);
    CHECK(oracle::enumerate_two_graphs(3).size() == 2);
    CHECK(oracle::enumerate_two_graphs(2).size() == 1);
}
