#include <doctest.h>

#include <stdexcept>

#include "eppa/eppa_core.hpp"
#include "eppa/oracle.hpp"
#include "test_util.hpp"

using namespace eppa;
using namespace eppa::testutil;

TEST_CASE("build_witness on the distance-1 quadruple") {
    WitnessContext ctx = build_witness(quadruple(1));
    REQUIRE(ctx.num_edges() == 2);
    CHECK(ctx.pode() == PodeLabelling{0, 1, 0, 1});
    // chi_1 = 00; chi_2(e_1) = 0 because d(x_2, x_1) = 1
    CHECK(ctx.psi(0) == WitnessVertex{0, 0b00});
    CHECK(ctx.psi(1) == WitnessVertex{0, 0b11});
    CHECK(ctx.psi(2) == WitnessVertex{1, 0b00});
    CHECK(ctx.psi(3) == WitnessVertex{1, 0b11});
    CHECK(ctx.distance(ctx.psi(0), ctx.psi(2)) == 1);
}

TEST_CASE("build_witness on the 2-point space") {
    WitnessContext ctx = build_witness(two_points());
    CHECK(ctx.num_edges() == 1);
    CHECK(ctx.psi(0) == WitnessVertex{0, 0});
    CHECK(ctx.psi(1) == WitnessVertex{0, 1});
    CHECK(ctx.distance({0, 0}, {0, 1}) == 3);
    CHECK(ctx.witness_size() == 2);
}

TEST_CASE("witness size is n * 2^n") {
    CHECK(build_witness(two_points()).witness_size() == 2);
    CHECK(build_witness(quadruple()).witness_size() == 8);
    CHECK(build_witness(two_triangles6()).witness_size() == 24);
}

TEST_CASE("distance rules") {
    WitnessContext ctx = build_witness(quadruple());
    CHECK(ctx.distance({0, 0b00}, {0, 0b11}) == 3);                 // rule (i)
    CHECK(ctx.distance({0, 0b00}, {1, 0b00}) == 1);                 // rule (ii)
    CHECK(ctx.distance({0, 0b10}, {1, 0b00}) == 2);                 // rule (iii)
    CHECK(ctx.distance({0, 0b00}, {0, 0b10}) == 1);                 // same edge, rule (ii) literal
    CHECK(ctx.distance({0, 0b00}, {0, 0b01}) == 2);                 // same edge, chi differ at e
    CHECK_THROWS_AS(ctx.distance({0, 0b00}, {0, 0b00}), std::invalid_argument);
}

TEST_CASE("pode_value and antipodes") {
    WitnessContext ctx = build_witness(quadruple());
    for (int v = 0; v < 4; ++v) CHECK(ctx.pode_value(ctx.psi(v)) == ctx.pode()[v]);
    for (std::uint64_t i = 0; i < ctx.witness_size(); ++i) {
        WitnessVertex v = ctx.vertex_at(i);
        CHECK(ctx.distance(v, ctx.antipode_of(v)) == 3);
        CHECK(ctx.pode_value(v) + ctx.pode_value(ctx.antipode_of(v)) == 1);
        CHECK(ctx.vertex_at(ctx.index_of(v)) == v);
    }
}

TEST_CASE("materialized witness is a valid antipodal space") {
    for (const AntipodalSpace& a : {two_points(), quadruple(1), quadruple(2), two_triangles6()}) {
        AntipodalSpace b = build_witness(a).materialize();
        CHECK(validate_antipodal(b).ok());
    }
}

TEST_CASE("materialize refuses oversized witnesses") {
    AntipodalSpace a(26);
    for (int i = 0; i < 13; ++i) a.set_dist(2 * i, 2 * i + 1, 3);
    for (int i = 0; i < 13; ++i)
        for (int j = i + 1; j < 13; ++j) {
            a.set_dist(2 * i, 2 * j, 1);
            a.set_dist(2 * i + 1, 2 * j + 1, 1);
            a.set_dist(2 * i, 2 * j + 1, 2);
            a.set_dist(2 * i + 1, 2 * j, 2);
        }
    REQUIRE(validate_antipodal(a).ok());
    CHECK_THROWS_AS(build_witness(a).materialize(12), std::length_error);
}

TEST_CASE("close_under_antipodes") {
    AntipodalSpace a = quadruple();
    PartialMap f{{0}, {2}, StructureKind::antipodal};
    PartialMap closed = close_under_antipodes(a, f);
    CHECK(closed.image_of(1) == 3);
    CHECK(closed.size() == 2);
    CHECK(close_under_antipodes(a, closed) == closed);
    PartialMap empty{{}, {}, StructureKind::antipodal};
    CHECK(close_under_antipodes(a, empty) == empty);
}

TEST_CASE("extend_order_preserving") {
    CHECK(extend_order_preserving({-1, -1, -1}, 3) == std::vector<int>{0, 1, 2});
    CHECK(extend_order_preserving({2, -1, -1}, 3) == std::vector<int>{2, 0, 1});
    CHECK(extend_order_preserving({1, 0, 2}, 3) == std::vector<int>{1, 0, 2});
}

TEST_CASE("flip set of the edge-fixing antipodal swap contains the singleton") {
    WitnessContext ctx = build_witness(two_points());
    PartialMap swap{{0, 1}, {1, 0}, StructureKind::antipodal};
    WitnessAutomorphism theta = extend_automorphism(ctx, swap);
    CHECK(theta.edge_perm == std::vector<int>{0});
    CHECK(theta.has_singleton_flip());
    CHECK(theta.apply({0, 0}) == WitnessVertex{0, 1});
}

TEST_CASE("identity extends to the identity") {
    WitnessContext ctx = build_witness(quadruple());
    PartialMap id{{0, 1, 2, 3}, {0, 1, 2, 3}, StructureKind::antipodal};
    WitnessAutomorphism theta = extend_automorphism(ctx, id);
    CHECK(theta.edge_perm == std::vector<int>{0, 1});
    CHECK_FALSE(theta.has_singleton_flip());
    for (std::uint64_t i = 0; i < ctx.witness_size(); ++i)
        CHECK(theta.apply(ctx.vertex_at(i)) == ctx.vertex_at(i));
}

TEST_CASE("theta is antipode-equivariant") {
    AntipodalSpace a = two_triangles6();
    WitnessContext ctx = build_witness(a);
    PartialMap f{{0, 1, 2, 3}, {2, 3, 4, 5}, StructureKind::antipodal};
    REQUIRE(is_partial_isomorphism(a, a, f));
    WitnessAutomorphism theta = extend_automorphism(ctx, f);
    for (std::uint64_t i = 0; i < ctx.witness_size(); ++i) {
        WitnessVertex v = ctx.vertex_at(i);
        CHECK(theta.apply(ctx.antipode_of(v)) == ctx.antipode_of(theta.apply(v)));
    }
}

TEST_CASE("extension property on every space up to 6 points") {
    for (int points : {2, 4, 6})
        for (const AntipodalSpace& a : oracle::enumerate_antipodal_spaces(points)) {
            WitnessContext ctx = build_witness(a);
            for (const PartialMap& f : oracle::antipode_closed_partial_isomorphisms(a)) {
                WitnessAutomorphism theta = extend_automorphism(ctx, f);
                for (std::size_t k = 0; k < f.dom.size(); ++k)
                    CHECK(theta.apply(ctx.psi(f.dom[k])) == ctx.psi(f.img[k]));
            }
        }
}
