#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eppa/structures.hpp"

namespace eppa {

/// p(v) in {0,1} with p(v) = 1 - p(antipode(v)).
using PodeLabelling = std::vector<int>;

bool is_pode_labelling(const AntipodalSpace& a, const PodeLabelling& p);

/// Distance-3 edges in canonical order: sorted by their minimal vertex.
/// This order is the matching-edge order used everywhere downstream.
std::vector<Edge> matching_edges(const AntipodalSpace& a);

/// Antipodal space on g x {0,1}; vertex (x,i) gets index 2x+i. Same-pode
/// pairs of distinct base vertices are at distance 1 exactly on edges,
/// cross-pode pairs exactly on non-edges, everything else is 2, and
/// (x,0),(x,1) are antipodal. The returned labelling is p((x,i)) = i.
std::pair<AntipodalSpace, PodeLabelling> double_cover(const Graph& g);

struct PodeGraphResult {
    Graph graph;
    std::vector<int> to_space;   // dense index -> vertex of a
    std::vector<int> from_space; // vertex of a -> dense index, or -1
};

/// Graph induced on the p = 0 pode by the distance-1 edges.
PodeGraphResult pode_graph(const AntipodalSpace& a, const PodeLabelling& p);

/// T(A): vertex set = matching edges in canonical order; a triple of
/// matching edges is a hyperedge iff their six points induce the
/// configuration whose distance-1 edges form two disjoint triangles
/// (rather than a single 6-cycle).
TwoGraph two_graph_of_antipodal(const AntipodalSpace& a);

/// Graph on V(t) with {y,z} an edge iff {x,y,z} is a triple of t.
/// Its associated two-graph is t again.
Graph graph_of_two_graph(const TwoGraph& t, int base);

struct LiftResult {
    bool ok = false;
    PartialMap alpha;                   // total isomorphism a1 -> a2 when ok
    std::vector<int> conflict_cycle;    // matching-edge indices of a1 witnessing failure
    std::string reason;
};

/// Lift an isomorphism beta of T(a1) -> T(a2), given as a total bijection
/// of matching-edge indices, to a vertex isomorphism a1 -> a2 inducing it.
/// One GF(2) variable per matching edge decides which endpoint of beta(e)
/// receives the canonical endpoint of e; propagation assigns 0 to the
/// minimal edge of each component and reports a contradiction cycle when
/// beta is not a two-graph isomorphism.
LiftResult lift_two_graph_isomorphism(const AntipodalSpace& a1, const AntipodalSpace& a2,
                                      const PartialMap& beta);

} // namespace eppa
