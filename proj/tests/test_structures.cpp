#include <doctest.h>

#include "eppa/structures.hpp"
#include "test_util.hpp"

using namespace eppa;
using namespace eppa::testutil;

TEST_CASE("validate_graph accepts the triangle") {
    CHECK(validate_graph(triangle()).ok());
}

TEST_CASE("validate_graph rejects loops and out-of-range endpoints") {
    Graph g;
    g.n = 3;
    g.edges.insert({0, 0});
    auto report = validate_graph(g);
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues.front().find("loop") != std::string::npos);

    Graph h;
    h.n = 3;
    h.edges.insert({0, 5});
    auto report2 = validate_graph(h);
    REQUIRE_FALSE(report2.ok());
    CHECK(report2.issues.front().find("range") != std::string::npos);
}

TEST_CASE("validate_two_graph checks parity on every 4-subset") {
    TwoGraph ok4{4, {make_triple(0, 1, 2), make_triple(0, 1, 3)}};
    CHECK(validate_two_graph(ok4).ok());

    TwoGraph bad4{4, {make_triple(0, 1, 2)}};
    CHECK_FALSE(validate_two_graph(bad4).ok());

    TwoGraph ok3{3, {make_triple(0, 1, 2)}};
    CHECK(validate_two_graph(ok3).ok()); // no 4-subset exists
}

TEST_CASE("validate_antipodal on the quadruple and on broken spaces") {
    CHECK(validate_antipodal(quadruple()).ok());
    CHECK(validate_antipodal(quadruple(2)).ok());
    CHECK(validate_antipodal(two_points()).ok());

    SUBCASE("four points all at distance 3 break the matching") {
        AntipodalSpace a(4);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) a.set_dist(u, v, 3);
        auto report = validate_antipodal(a);
        REQUIRE_FALSE(report.ok());
        bool mentions_matching = false;
        for (const auto& issue : report.issues)
            if (issue.find("matching") != std::string::npos) mentions_matching = true;
        CHECK(mentions_matching);
    }

    SUBCASE("2-2-3 triangle is rejected") {
        AntipodalSpace a = quadruple();
        a.set_dist(0, 2, 2); // now 0,2 at 2, 2,3 at 3, 0,3 at 2
        auto report = validate_antipodal(a);
        REQUIRE_FALSE(report.ok());
        bool mentions = false;
        for (const auto& issue : report.issues)
            if (issue.find("2-2-3") != std::string::npos) mentions = true;
        CHECK(mentions);
    }

    SUBCASE("1-1-3 violates the triangle inequality") {
        AntipodalSpace a = quadruple();
        a.set_dist(0, 3, 1);
        a.set_dist(1, 2, 1);
        CHECK_FALSE(validate_antipodal(a).ok());
    }
}

TEST_CASE("antipode is the matching partner and an involution") {
    AntipodalSpace a = quadruple();
    CHECK(antipode(a, 0) == 1);
    CHECK(antipode(a, 1) == 0);
    CHECK(antipode(a, 2) == 3);
    for (int v = 0; v < a.n; ++v) CHECK(antipode(a, antipode(a, v)) == v);
    CHECK(antipode(two_points(), 0) == 1);
}

TEST_CASE("partial map helpers") {
    PartialMap f{{0, 2}, {1, 3}, StructureKind::graph};
    CHECK(f.well_formed());
    CHECK(f.image_of(0) == 1);
    CHECK(f.image_of(1) == std::nullopt);
    CHECK(f.preimage_of(3) == 2);
    CHECK(f.contains(2));

    PartialMap dup{{0, 0}, {1, 2}, StructureKind::graph};
    CHECK_FALSE(dup.well_formed());
}

TEST_CASE("is_partial_isomorphism on graphs") {
    Graph g = triangle(), h = path3();
    PartialMap id01{{0, 1}, {0, 1}, StructureKind::graph};
    CHECK(is_partial_isomorphism(g, g, id01));
    CHECK(is_partial_isomorphism(g, h, id01)); // both restrict to a single edge
    PartialMap bad{{0, 2}, {0, 2}, StructureKind::graph};
    CHECK_FALSE(is_partial_isomorphism(g, h, bad)); // edge {0,2} vs non-edge
}

TEST_CASE("is_partial_isomorphism on antipodal spaces") {
    AntipodalSpace a = quadruple();
    PartialMap swap_edges{{0, 1, 2, 3}, {2, 3, 0, 1}, StructureKind::antipodal};
    CHECK(is_partial_isomorphism(a, a, swap_edges));
    PartialMap bad{{0, 1}, {0, 2}, StructureKind::antipodal}; // d(0,1)=3 vs d(0,2)=1
    CHECK_FALSE(is_partial_isomorphism(a, a, bad));
}
