#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "eppa/eppa_core.hpp"
#include "eppa/switching.hpp"

namespace eppa {

/// Witness graph H for a source graph G, together with every
/// correspondence needed to translate maps back and forth: the double
/// cover A with its pode, the witness context over A, and the dense
/// indexing of the pode-0 witness vertices that carries H.
struct SwitchingEppaCertificate {
    Graph source;                          // G
    Graph witness;                         // H, materialized
    WitnessContext ctx;                    // over A = double_cover(source)
    PodeLabelling cover_pode;              // p on A
    std::vector<WitnessVertex> h_vertices; // H index -> witness vertex with pode value 0
    std::map<WitnessVertex, int> h_index;  // reverse
    std::vector<int> embedding;            // G vertex -> H index (image of psi((x,0)))
};

SwitchingEppaCertificate switching_eppa_witness(const Graph& g, int max_edges = 12);

/// Lifts a partial graph isomorphism of G pode-preservingly to the double
/// cover, extends it coherently, and restricts the result to H. Returns
/// the total vertex permutation of H.
std::vector<int> extend_plain_iso(const SwitchingEppaCertificate& cert, const PartialMap& phi);

struct SwitchingAutomorphism {
    std::vector<int> map;     // total vertex permutation of H
    std::set<int> switch_set; // S_H
};

/// Lifts a switching partial isomorphism (flipping the pode on the switch
/// set), extends it, and restricts to H by following each image through
/// the antipode when it lands in the wrong pode.
SwitchingAutomorphism extend_switching_iso(const SwitchingEppaCertificate& cert,
                                           const SwitchingPartialMap& phi);

struct TwoGraphEppaCertificate {
    TwoGraph source; // T
    int base;        // base vertex for the derived graph
    Graph derived;   // G with T(G) = T
    SwitchingEppaCertificate inner;
    TwoGraph witness;           // T(H)
    std::vector<int> embedding; // T vertex -> vertex of T(H)
};

TwoGraphEppaCertificate two_graph_eppa_witness(const TwoGraph& t, int max_edges = 12);

/// Extends a partial two-graph isomorphism: recovers the canonical switch
/// set on the derived graph, extends the switching isomorphism, and reads
/// the resulting vertex permutation of H as an automorphism of T(H).
std::vector<int> extend_two_graph_partial(const TwoGraphEppaCertificate& cert,
                                          const PartialMap& phi);

struct ApaCandidate {
    TwoGraph amalgam;
    bool respects_automorphisms = false;
    std::string failure; // why the automorphism pair does not extend
};

/// Machine-checked failure of the amalgamation property with
/// automorphisms on the four-vertex instance: A = {u,v}, B1 adds x1 with
/// no triple, B2 adds x2 with the triple {u,v,x2}.
struct ApaReport {
    TwoGraph b1, b2;
    std::vector<ApaCandidate> candidates; // every parity-valid amalgam
    bool amalgam_exists = false;
    bool apa_holds = false; // expected false
};

ApaReport apa_counterexample_report();

} // namespace eppa
