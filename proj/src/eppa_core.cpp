#include "eppa/eppa_core.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/core.h>

namespace eppa {

WitnessContext::WitnessContext(AntipodalSpace a, std::vector<Edge> edges, PodeLabelling pode,
                               std::vector<WitnessVertex> psi)
    : space_(std::move(a)), edges_(std::move(edges)), pode_(std::move(pode)), psi_(std::move(psi)) {}

int WitnessContext::distance(WitnessVertex u, WitnessVertex v) const {
    if (u == v) throw std::invalid_argument("distance of a witness vertex to itself");
    if (u.edge == v.edge && v.chi == (u.chi ^ valuation_mask())) return 3;
    int chi_u_at_v = static_cast<int>((u.chi >> v.edge) & 1);
    int chi_v_at_u = static_cast<int>((v.chi >> u.edge) & 1);
    return chi_u_at_v == chi_v_at_u ? 1 : 2;
}

AntipodalSpace WitnessContext::materialize(int max_edges) const {
    int n = num_edges();
    if (n > max_edges)
        throw std::length_error(
            fmt::format("witness materialization refused: {} matching edges exceeds limit {}", n,
                        max_edges));
    auto size = witness_size();
    AntipodalSpace b(static_cast<int>(size));
    for (std::uint64_t i = 0; i < size; ++i)
        for (std::uint64_t j = i + 1; j < size; ++j)
            b.set_dist(static_cast<int>(i), static_cast<int>(j),
                       distance(vertex_at(i), vertex_at(j)));
    return b;
}

WitnessContext build_witness(const AntipodalSpace& a) {
    auto report = validate_antipodal(a);
    if (!report.ok())
        throw std::invalid_argument("invalid antipodal space: " + report.issues.front());
    auto edges = matching_edges(a);
    int n = static_cast<int>(edges.size());
    if (n > kMaxMatchingEdges)
        throw std::length_error(
            fmt::format("{} matching edges exceeds capacity {}", n, kMaxMatchingEdges));

    PodeLabelling pode(a.n, 0);
    for (const auto& [x, y] : edges) {
        pode[x] = 0;
        pode[y] = 1;
    }

    Valuation mask = n == 0 ? 0 : ((Valuation{1} << n) - 1);
    std::vector<WitnessVertex> psi(a.n);
    for (int i = 0; i < n; ++i) {
        Valuation chi = 0;
        for (int j = 0; j < i; ++j)
            if (a.dist(edges[i].first, edges[j].first) != 1) chi |= Valuation{1} << j;
        psi[edges[i].first] = {i, chi};
        psi[edges[i].second] = {i, chi ^ mask};
    }

    WitnessContext ctx(a, std::move(edges), std::move(pode), std::move(psi));
    for (int u = 0; u < a.n; ++u)
        for (int v = u + 1; v < a.n; ++v)
            if (ctx.distance(ctx.psi(u), ctx.psi(v)) != a.dist(u, v))
                throw std::logic_error("generic embedding is not distance-preserving");
    return ctx;
}

WitnessVertex WitnessAutomorphism::apply(WitnessVertex v) const {
    int n = static_cast<int>(edge_perm.size());
    if (v.edge < 0 || v.edge >= n) throw std::invalid_argument("witness vertex out of range");
    Valuation flip_row = flips[v.edge];
    Valuation xi = 0;
    for (int f = 0; f < n; ++f) {
        Valuation bit = ((v.chi >> f) ^ (flip_row >> f)) & 1;
        xi |= bit << edge_perm[f];
    }
    return {edge_perm[v.edge], xi};
}

bool WitnessAutomorphism::has_singleton_flip() const {
    for (std::size_t e = 0; e < flips.size(); ++e)
        if ((flips[e] >> e) & 1) return true;
    return false;
}

PartialMap close_under_antipodes(const AntipodalSpace& a, const PartialMap& f) {
    if (!is_partial_isomorphism(a, a, f))
        throw std::invalid_argument("not a partial isomorphism of the space");
    PartialMap closed = f;
    for (std::size_t i = 0; i < f.dom.size(); ++i) {
        int av = antipode(a, f.dom[i]);
        int aw = antipode(a, f.img[i]);
        if (auto existing = closed.image_of(av)) {
            if (*existing != aw)
                throw std::logic_error("partial isomorphism maps antipodes inconsistently");
        } else {
            closed.dom.push_back(av);
            closed.img.push_back(aw);
        }
    }
    return closed;
}

std::vector<int> extend_order_preserving(const std::vector<int>& partial, int n) {
    std::vector<int> perm = partial;
    std::vector<bool> target_used(n, false);
    for (int i = 0; i < n; ++i)
        if (perm[i] != -1) target_used[perm[i]] = true;
    std::vector<int> free_targets;
    for (int j = 0; j < n; ++j)
        if (!target_used[j]) free_targets.push_back(j);
    std::size_t next = 0;
    for (int i = 0; i < n; ++i)
        if (perm[i] == -1) perm[i] = free_targets[next++];
    return perm;
}

std::vector<int> project_and_extend(const WitnessContext& ctx, const PartialMap& closed) {
    int n = ctx.num_edges();
    std::vector<int> edge_of_vertex(ctx.space().n, -1);
    for (int i = 0; i < n; ++i) {
        edge_of_vertex[ctx.edge_order()[i].first] = i;
        edge_of_vertex[ctx.edge_order()[i].second] = i;
    }
    std::vector<int> partial(n, -1);
    for (std::size_t k = 0; k < closed.dom.size(); ++k) {
        int e = edge_of_vertex[closed.dom[k]];
        int target = edge_of_vertex[closed.img[k]];
        if (partial[e] != -1 && partial[e] != target)
            throw std::logic_error("projection to matching edges is not well-defined");
        partial[e] = target;
    }
    return extend_order_preserving(partial, n);
}

std::vector<Valuation> flip_set(const WitnessContext& ctx, const PartialMap& closed,
                                const std::vector<int>& edge_perm) {
    int n = ctx.num_edges();
    std::vector<Valuation> per_source(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < closed.dom.size(); ++k) {
        WitnessVertex u = ctx.psi(closed.dom[k]);
        WitnessVertex w = ctx.psi(closed.img[k]);
        if (edge_perm[u.edge] != w.edge)
            throw std::logic_error("edge permutation disagrees with the partial automorphism");
        Valuation mask = 0;
        for (int f = 0; f < n; ++f) {
            Valuation chi_f = (u.chi >> f) & 1;
            Valuation chi_pf = (w.chi >> edge_perm[f]) & 1;
            if (chi_f != chi_pf) mask |= Valuation{1} << f;
        }
        if (seen[u.edge]) {
            // both antipodal choices of chi must flip the same pairs
            if (per_source[u.edge] != mask)
                throw std::logic_error("flip set ill-defined across antipodal valuations");
        } else {
            per_source[u.edge] = mask;
            seen[u.edge] = true;
        }
    }
    // symmetrize {e,f} membership
    std::vector<Valuation> flips(n, 0);
    for (int e = 0; e < n; ++e) {
        if (!seen[e]) continue;
        flips[e] |= per_source[e];
        for (int f = 0; f < n; ++f)
            if ((per_source[e] >> f) & 1) flips[f] |= Valuation{1} << e;
    }
    for (int e = 0; e < n; ++e)
        if (seen[e] && flips[e] != per_source[e])
            throw std::logic_error("flip set asymmetric on the projected domain");
    return flips;
}

WitnessAutomorphism extend_automorphism(const WitnessContext& ctx, const PartialMap& phi) {
    PartialMap closed = close_under_antipodes(ctx.space(), phi);
    std::vector<int> perm = project_and_extend(ctx, closed);
    std::vector<Valuation> flips = flip_set(ctx, closed, perm);
    return WitnessAutomorphism{std::move(perm), std::move(flips)};
}

} // namespace eppa
