#pragma once

#include <cstdint>
#include <vector>

#include "eppa/pipelines.hpp"
#include "eppa/structures.hpp"

// Brute-force ground truth. Every checked property is re-implemented here
// from its definition, without calling the library code under test; the
// structures are shared only as passive data carriers.
namespace eppa::oracle {

/// All labeled graphs on k vertices (k <= 6), edge-mask order.
std::vector<Graph> enumerate_graphs(int k);

/// All labeled parity-valid triple systems on k vertices (k <= 6),
/// triple-mask order.
std::vector<TwoGraph> enumerate_two_graphs(int k);

/// All labeled valid antipodal spaces on the given even number of points
/// (<= 8) with the fixed matching {2i, 2i+1}. Candidates come from the
/// per-quadruple distance bits and each is kept only if it passes the
/// oracle's own axiom filter.
std::vector<AntipodalSpace> enumerate_antipodal_spaces(int points);

/// Second, independently coded filter: brute force over all assignments
/// of {1,2,3} to the cross pairs (points <= 6).
std::vector<AntipodalSpace> enumerate_antipodal_spaces_filter(int points);

/// Direct check of the antipodal axioms, coded apart from validate_antipodal.
bool satisfies_antipodal_axioms(const AntipodalSpace& a);
bool satisfies_two_graph_axiom(const TwoGraph& t);

std::vector<std::vector<int>> all_automorphisms(const Graph& g);
std::vector<std::vector<int>> all_automorphisms(const TwoGraph& t);
std::vector<std::vector<int>> all_automorphisms(const AntipodalSpace& a);

std::vector<PartialMap> all_partial_isomorphisms(const Graph& g, int max_size);
std::vector<PartialMap> all_partial_isomorphisms(const TwoGraph& t, int max_size);
std::vector<PartialMap> all_partial_isomorphisms(const AntipodalSpace& a, int max_size);

/// Partial isomorphisms whose dom and img are closed under antipodes.
std::vector<PartialMap> antipode_closed_partial_isomorphisms(const AntipodalSpace& a);

/// All injective partial vertex maps of g (not necessarily isomorphisms)
/// paired with every switch set S within dom that makes them switching
/// isomorphisms of the induced subgraphs, found by exhaustive search over
/// all 2^|dom| subsets.
std::vector<SwitchingPartialMap> all_switching_partial_isomorphisms(const Graph& g, int max_size);

struct VerifyReport {
    long checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// The witness over a valid space is itself a valid antipodal space of
/// size n * 2^n (checked against the oracle's own axiom filter).
VerifyReport verify_witness_antipodal(const AntipodalSpace& a);

/// Every antipode-closed partial isomorphism extends to a verified
/// automorphism of the witness that agrees with it through the embedding.
VerifyReport verify_eppa_antipodal(const AntipodalSpace& a);

/// theta_h = theta_g . theta_f pointwise for every coherent triple of
/// antipode-closed partial isomorphisms. max_triples < 0 means all.
VerifyReport verify_coherence_antipodal(const AntipodalSpace& a, long max_triples = -1);

/// Pode-preserving partial isomorphisms extend pode-preservingly and
/// produce no singleton flips.
VerifyReport verify_pode_preservation(const AntipodalSpace& a);

/// Theorem on graphs: plain and switching partial isomorphisms all extend
/// through the pipeline to verified (switching) automorphisms of H.
VerifyReport verify_eppa_graph(const Graph& g);

/// Theorem on two-graphs: every partial automorphism of t extends to a
/// verified automorphism of T(H).
VerifyReport verify_eppa_two_graph(const TwoGraph& t);

struct CoherenceMeasurement {
    long triples = 0;
    long violations = 0;
};

/// Coherence is measured, not asserted, for the two-graph pipeline.
CoherenceMeasurement measure_two_graph_coherence(const TwoGraph& t);

} // namespace eppa::oracle
