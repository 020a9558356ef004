#include <doctest.h>

#include "eppa/oracle.hpp"
#include "test_util.hpp"

using namespace eppa;
using namespace eppa::testutil;
namespace orc = eppa::oracle;

TEST_CASE("frozen enumeration counts") {
    CHECK(orc::enumerate_graphs(3).size() == 8);
    CHECK(orc::enumerate_graphs(4).size() == 64);
    CHECK(orc::enumerate_two_graphs(2).size() == 1);
    CHECK(orc::enumerate_two_graphs(3).size() == 2);
    CHECK(orc::enumerate_two_graphs(4).size() == 8);
    CHECK(orc::enumerate_two_graphs(5).size() == 64);
    CHECK(orc::enumerate_antipodal_spaces(2).size() == 1);
    CHECK(orc::enumerate_antipodal_spaces(4).size() == 2);
    CHECK(orc::enumerate_antipodal_spaces(6).size() == 8);
    CHECK(orc::enumerate_antipodal_spaces(8).size() == 64);
}

TEST_CASE("the two antipodal enumerators agree") {
    for (int points : {2, 4, 6}) {
        auto fast = orc::enumerate_antipodal_spaces(points);
        auto slow = orc::enumerate_antipodal_spaces_filter(points);
        std::set<AntipodalSpace> a(fast.begin(), fast.end());
        std::set<AntipodalSpace> b(slow.begin(), slow.end());
        CHECK(a == b);
        CHECK(fast.size() == a.size()); // duplicate-free
    }
}

TEST_CASE("oracle axiom filters agree with the library validators") {
    for (int k = 2; k <= 5; ++k)
        for (const TwoGraph& t : orc::enumerate_two_graphs(k))
            CHECK(validate_two_graph(t).ok());
    // and conversely on all triple-sets for k = 4
    int valid = 0;
    for (int mask = 0; mask < 16; ++mask) {
        TwoGraph t{4, {}};
        std::array<Triple, 4> slots = {make_triple(0, 1, 2), make_triple(0, 1, 3),
                                       make_triple(0, 2, 3), make_triple(1, 2, 3)};
        for (int i = 0; i < 4; ++i)
            if ((mask >> i) & 1) t.triples.insert(slots[i]);
        bool lib = validate_two_graph(t).ok();
        CHECK(lib == orc::satisfies_two_graph_axiom(t));
        if (lib) ++valid;
    }
    CHECK(valid == 8);

    for (const AntipodalSpace& a : orc::enumerate_antipodal_spaces(6)) {
        CHECK(validate_antipodal(a).ok());
        CHECK(orc::satisfies_antipodal_axioms(a));
    }
    AntipodalSpace broken = quadruple();
    broken.set_dist(0, 2, 2);
    CHECK_FALSE(orc::satisfies_antipodal_axioms(broken));
    CHECK_FALSE(validate_antipodal(broken).ok());
}

TEST_CASE("automorphism counts") {
    CHECK(orc::all_automorphisms(graph_of(3, {})).size() == 6);
    CHECK(orc::all_automorphisms(TwoGraph{3, {make_triple(0, 1, 2)}}).size() == 6);
    // quadruple automorphisms preserve the matching
    for (const auto& perm : orc::all_automorphisms(quadruple())) {
        CHECK(perm[1] == antipode(quadruple(), perm[0]));
    }
}

TEST_CASE("partial isomorphism counts on the empty 2-vertex graph") {
    auto maps = orc::all_partial_isomorphisms(graph_of(2, {}), 2);
    CHECK(maps.size() == 7); // empty map + 4 singletons + 2 bijections
    bool has_empty = false, has_identity = false;
    for (const auto& f : maps) {
        if (f.dom.empty()) has_empty = true;
        if (f.dom == std::vector<int>{0, 1} && f.img == std::vector<int>{0, 1})
            has_identity = true;
    }
    CHECK(has_empty);
    CHECK(has_identity);
}

TEST_CASE("antipode-closed partial isomorphisms are closed") {
    AntipodalSpace a = quadruple();
    for (const auto& f : orc::antipode_closed_partial_isomorphisms(a))
        for (std::size_t i = 0; i < f.dom.size(); ++i) {
            CHECK(f.contains(antipode(a, f.dom[i])));
            CHECK(f.image_of(antipode(a, f.dom[i])) == antipode(a, f.img[i]));
        }
}

TEST_CASE("witness and eppa verification pass on small spaces") {
    for (int points : {2, 4, 6})
        for (const AntipodalSpace& a : orc::enumerate_antipodal_spaces(points)) {
            CHECK(orc::verify_witness_antipodal(a).ok());
            auto report = orc::verify_eppa_antipodal(a);
            CHECK(report.ok());
            CHECK(report.checked > 0);
        }
}

TEST_CASE("fault injection: a corrupted extension is detected") {
    AntipodalSpace a = quadruple();
    WitnessContext ctx = build_witness(a);
    PartialMap id{{0, 1, 2, 3}, {0, 1, 2, 3}, StructureKind::antipodal};
    WitnessAutomorphism theta = extend_automorphism(ctx, id);
    theta.flips[0] ^= 1; // force the singleton {e_0} into F
    CHECK(theta.has_singleton_flip());
    bool distance_broken = false;
    for (std::uint64_t i = 0; i < ctx.witness_size() && !distance_broken; ++i)
        for (std::uint64_t j = i + 1; j < ctx.witness_size(); ++j) {
            WitnessVertex u = ctx.vertex_at(i), v = ctx.vertex_at(j);
            if (ctx.pode_value(theta.apply(u)) != ctx.pode_value(u)) distance_broken = true;
        }
    CHECK(distance_broken); // pode no longer preserved
}

TEST_CASE("coherence verification on 4-point spaces") {
    for (const AntipodalSpace& a : orc::enumerate_antipodal_spaces(4)) {
        auto report = orc::verify_coherence_antipodal(a);
        CHECK(report.ok());
        CHECK(report.checked > 0);
    }
}

TEST_CASE("pode preservation on small spaces") {
    for (int points : {2, 4})
        for (const AntipodalSpace& a : orc::enumerate_antipodal_spaces(points))
            CHECK(orc::verify_pode_preservation(a).ok());
}

TEST_CASE("graph and two-graph EPPA verification on 3 vertices") {
    for (const Graph& g : orc::enumerate_graphs(3)) CHECK(orc::verify_eppa_graph(g).ok());
    for (const TwoGraph& t : orc::enumerate_two_graphs(3))
        CHECK(orc::verify_eppa_two_graph(t).ok());
}

TEST_CASE("two-graph coherence is measured without asserting") {
    for (const TwoGraph& t : orc::enumerate_two_graphs(3)) {
        auto m = orc::measure_two_graph_coherence(t);
        CHECK(m.triples > 0);
        CHECK(m.violations >= 0);
    }
}
