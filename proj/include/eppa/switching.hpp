#pragma once

#include <optional>
#include <set>

#include "eppa/structures.hpp"

namespace eppa {

/// Complement the edges between s and its complement.
Graph seidel_switch(const Graph& g, const std::set<int>& s);

/// T(g): {a,b,c} is a triple iff the induced 3-vertex subgraph has an odd
/// number of edges.
TwoGraph associated_two_graph(const Graph& g);

/// Canonical switch set S ⊆ dom(f) making f an isomorphism of the switched
/// induced subgraph of g onto the induced image subgraph of h, or nullopt.
///
/// Solves s(u) xor s(v) = edge_g(u,v) xor edge_h(f(u),f(v)) over GF(2) by
/// propagation; the minimal vertex of each constraint component is left
/// unswitched.
std::optional<std::set<int>> find_switch_set(const Graph& g, const Graph& h, const PartialMap& f);

bool is_switching_isomorphism(const Graph& g, const Graph& h, const PartialMap& f);

} // namespace eppa
