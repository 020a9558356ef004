#pragma once

#include <initializer_list>

#include "eppa/structures.hpp"

namespace eppa::testutil {

inline Graph graph_of(int n, std::initializer_list<Edge> edges) {
    Graph g;
    g.n = n;
    for (const auto& [u, v] : edges) g.edges.insert(make_edge(u, v));
    return g;
}

inline Graph path3() {
    return graph_of(3, {{0, 1}, {1, 2}});
}

inline Graph triangle() {
    return graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
}

// The antipodal quadruple: matching {0,1}, {2,3}; d(0,2) selectable.
inline AntipodalSpace quadruple(int d02 = 1) {
    AntipodalSpace a(4);
    a.set_dist(0, 1, 3);
    a.set_dist(2, 3, 3);
    a.set_dist(0, 2, d02);
    a.set_dist(1, 3, d02);
    a.set_dist(0, 3, 3 - d02);
    a.set_dist(1, 2, 3 - d02);
    return a;
}

// 6-point space over matching {0,1},{2,3},{4,5}; bits b01, b02, b12 give
// d(2i,2j) = 1 when set, 2 otherwise; the remaining cross distances are
// forced. All bits set -> distance-1 edges are two disjoint triangles;
// exactly two bits set -> a single 6-cycle.
inline AntipodalSpace six_point(bool b01, bool b02, bool b12) {
    AntipodalSpace a(6);
    for (int i = 0; i < 3; ++i) a.set_dist(2 * i, 2 * i + 1, 3);
    auto put = [&](int i, int j, bool bit) {
        int d = bit ? 1 : 2;
        a.set_dist(2 * i, 2 * j, d);
        a.set_dist(2 * i + 1, 2 * j + 1, d);
        a.set_dist(2 * i, 2 * j + 1, 3 - d);
        a.set_dist(2 * i + 1, 2 * j, 3 - d);
    };
    put(0, 1, b01);
    put(0, 2, b02);
    put(1, 2, b12);
    return a;
}

inline AntipodalSpace two_triangles6() {
    return six_point(true, true, true);
}

inline AntipodalSpace six_cycle6() {
    return six_point(true, false, true);
}

inline AntipodalSpace two_points() {
    AntipodalSpace a(2);
    a.set_dist(0, 1, 3);
    return a;
}

} // namespace eppa::testutil
