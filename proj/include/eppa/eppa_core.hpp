#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eppa/antipodal.hpp"
#include "eppa/structures.hpp"

namespace eppa {

/// Bit i holds the valuation at matching edge i. Capacity is capped so a
/// valuation always fits one word.
using Valuation = std::uint64_t;

inline constexpr int kMaxMatchingEdges = 63;

struct WitnessVertex {
    int edge = 0;
    Valuation chi = 0;

    bool operator==(const WitnessVertex&) const = default;
    auto operator<=>(const WitnessVertex&) const = default;
};

/// The witness space over a source antipodal space: vertices are pairs
/// (matching edge, valuation) and distances are evaluated lazily from the
/// three construction rules. Immutable after build_witness.
class WitnessContext {
  public:
    WitnessContext(AntipodalSpace a, std::vector<Edge> edges, PodeLabelling pode,
                   std::vector<WitnessVertex> psi);

    const AntipodalSpace& space() const { return space_; }
    const std::vector<Edge>& edge_order() const { return edges_; }
    const PodeLabelling& pode() const { return pode_; }

    int num_edges() const { return static_cast<int>(edges_.size()); }
    Valuation valuation_mask() const { return (Valuation{1} << num_edges()) - 1; }
    std::uint64_t witness_size() const {
        return static_cast<std::uint64_t>(num_edges()) << num_edges();
    }

    /// Generic embedding of the source space; indexed by source vertex.
    const std::vector<WitnessVertex>& embedding() const { return psi_; }
    WitnessVertex psi(int v) const { return psi_[v]; }

    /// Distance in the witness space: 3 on complementary valuations over
    /// the same edge, otherwise 1 iff chi(f) = chi'(e).
    int distance(WitnessVertex u, WitnessVertex v) const;

    /// The pode extension: value of the valuation at its own edge.
    int pode_value(WitnessVertex v) const { return static_cast<int>((v.chi >> v.edge) & 1); }

    WitnessVertex antipode_of(WitnessVertex v) const {
        return {v.edge, v.chi ^ valuation_mask()};
    }

    /// Dense index of a witness vertex: edge * 2^n + chi.
    std::uint64_t index_of(WitnessVertex v) const {
        return (static_cast<std::uint64_t>(v.edge) << num_edges()) + v.chi;
    }
    WitnessVertex vertex_at(std::uint64_t index) const {
        return {static_cast<int>(index >> num_edges()), index & valuation_mask()};
    }

    /// The witness space as an explicit AntipodalSpace, vertex order as in
    /// index_of. Refuses n beyond the limit (n * 2^n growth).
    AntipodalSpace materialize(int max_edges = 12) const;

  private:
    AntipodalSpace space_;
    std::vector<Edge> edges_;
    PodeLabelling pode_;
    std::vector<WitnessVertex> psi_;
};

/// Builds the witness context for a valid space: canonical pode assigns 0
/// to the smaller endpoint of each matching edge, and the embedding sends
/// the i-th pode-0 endpoint to (e_i, chi_i) with the three-case valuation.
WitnessContext build_witness(const AntipodalSpace& a);

/// Extension of a partial automorphism, stored compactly as the total
/// matching-edge permutation together with the flip set. flips[e] has bit
/// f set iff the unordered pair {e,f} is flipped.
struct WitnessAutomorphism {
    std::vector<int> edge_perm;
    std::vector<Valuation> flips;

    WitnessVertex apply(WitnessVertex v) const;
    bool has_singleton_flip() const;
};

/// Extends a partial isomorphism to dom/img closed under antipodes via
/// f(antipode(v)) = antipode(f(v)).
PartialMap close_under_antipodes(const AntipodalSpace& a, const PartialMap& f);

/// Order-preserving extension of a partial permutation of 0..n-1 given as
/// image[-1 for undefined]: leftover sources map to leftover targets in
/// increasing order.
std::vector<int> extend_order_preserving(const std::vector<int>& partial, int n);

/// The partial matching-edge permutation induced by an antipode-closed
/// partial isomorphism of the source space, extended order-preservingly.
std::vector<int> project_and_extend(const WitnessContext& ctx, const PartialMap& closed);

/// Flip set of the translated partial automorphism of the generic copy.
std::vector<Valuation> flip_set(const WitnessContext& ctx, const PartialMap& closed,
                                const std::vector<int>& edge_perm);

/// The coherent extension: close under antipodes, project, extend
/// order-preservingly and collect flips. The result extends psi∘phi∘psi⁻¹
/// and is a distance-preserving bijection of the witness space.
WitnessAutomorphism extend_automorphism(const WitnessContext& ctx, const PartialMap& phi);

} // namespace eppa
