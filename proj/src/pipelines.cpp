#include "eppa/pipelines.hpp"

#include <stdexcept>

#include <fmt/core.h>

namespace eppa {

SwitchingEppaCertificate switching_eppa_witness(const Graph& g, int max_edges) {
    auto report = validate_graph(g);
    if (!report.ok())
        throw std::invalid_argument("invalid graph: " + report.issues.front());
    auto [cover, pode] = double_cover(g);
    WitnessContext ctx = build_witness(cover);
    if (ctx.pode() != pode)
        throw std::logic_error("canonical pode disagrees with the double-cover pode");
    int n = ctx.num_edges();
    if (n > max_edges)
        throw std::length_error(fmt::format(
            "witness graph materialization refused: {} matching edges exceeds limit {}", n,
            max_edges));

    SwitchingEppaCertificate cert{g, Graph{}, std::move(ctx), std::move(pode), {}, {}, {}};
    for (int e = 0; e < n; ++e)
        for (Valuation chi = 0; chi <= cert.ctx.valuation_mask(); ++chi) {
            WitnessVertex v{e, chi};
            if (cert.ctx.pode_value(v) == 0) {
                cert.h_index[v] = static_cast<int>(cert.h_vertices.size());
                cert.h_vertices.push_back(v);
            }
        }
    int h_n = static_cast<int>(cert.h_vertices.size());
    std::set<Edge> h_edges;
    for (int i = 0; i < h_n; ++i)
        for (int j = i + 1; j < h_n; ++j)
            if (cert.ctx.distance(cert.h_vertices[i], cert.h_vertices[j]) == 1)
                h_edges.insert({i, j});
    cert.witness = Graph{h_n, std::move(h_edges)};

    cert.embedding.resize(g.n);
    for (int x = 0; x < g.n; ++x)
        cert.embedding[x] = cert.h_index.at(cert.ctx.psi(2 * x));
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y)
            if (g.has_edge(x, y) != cert.witness.has_edge(cert.embedding[x], cert.embedding[y]))
                throw std::logic_error("source graph does not embed into the witness graph");
    return cert;
}

namespace {

// Lift a partial map of G to the double cover, flipping the pode on the
// switch set.
PartialMap lift_to_cover(const PartialMap& phi, const std::set<int>& switched) {
    PartialMap lifted;
    lifted.kind = StructureKind::antipodal;
    for (std::size_t k = 0; k < phi.dom.size(); ++k) {
        int flip = switched.count(phi.dom[k]) ? 1 : 0;
        for (int i = 0; i < 2; ++i) {
            lifted.dom.push_back(2 * phi.dom[k] + i);
            lifted.img.push_back(2 * phi.img[k] + (i ^ flip));
        }
    }
    return lifted;
}

} // namespace

std::vector<int> extend_plain_iso(const SwitchingEppaCertificate& cert, const PartialMap& phi) {
    if (!is_partial_isomorphism(cert.source, cert.source, phi))
        throw std::invalid_argument("not a partial isomorphism of the source graph");
    WitnessAutomorphism theta = extend_automorphism(cert.ctx, lift_to_cover(phi, {}));
    std::vector<int> map(cert.h_vertices.size());
    for (std::size_t v = 0; v < cert.h_vertices.size(); ++v) {
        WitnessVertex w = theta.apply(cert.h_vertices[v]);
        if (cert.ctx.pode_value(w) != 0)
            throw std::logic_error("pode-preserving extension left the witness graph");
        map[v] = cert.h_index.at(w);
    }
    return map;
}

SwitchingAutomorphism extend_switching_iso(const SwitchingEppaCertificate& cert,
                                           const SwitchingPartialMap& phi) {
    const PartialMap& f = phi.map;
    if (!f.well_formed())
        throw std::invalid_argument("partial map is not a bijection");
    for (std::size_t i = 0; i < f.dom.size(); ++i)
        for (std::size_t j = i + 1; j < f.dom.size(); ++j) {
            bool crossing = (phi.switch_set.count(f.dom[i]) != 0) !=
                            (phi.switch_set.count(f.dom[j]) != 0);
            if ((cert.source.has_edge(f.dom[i], f.dom[j]) != crossing) !=
                cert.source.has_edge(f.img[i], f.img[j]))
                throw std::invalid_argument(
                    "switch set does not witness a switching isomorphism");
        }

    WitnessAutomorphism theta = extend_automorphism(cert.ctx, lift_to_cover(f, phi.switch_set));
    SwitchingAutomorphism result;
    result.map.resize(cert.h_vertices.size());
    for (std::size_t v = 0; v < cert.h_vertices.size(); ++v) {
        WitnessVertex w = theta.apply(cert.h_vertices[v]);
        if (cert.ctx.pode_value(w) == 1) {
            result.switch_set.insert(static_cast<int>(v));
            w = cert.ctx.antipode_of(w);
        }
        result.map[v] = cert.h_index.at(w);
    }
    return result;
}

TwoGraphEppaCertificate two_graph_eppa_witness(const TwoGraph& t, int max_edges) {
    auto report = validate_two_graph(t);
    if (!report.ok())
        throw std::invalid_argument("invalid two-graph: " + report.issues.front());
    int base = 0;
    Graph derived = t.n == 0 ? Graph{} : graph_of_two_graph(t, base);
    if (associated_two_graph(derived) != t)
        throw std::logic_error("derived graph does not reproduce the source two-graph");
    SwitchingEppaCertificate inner = switching_eppa_witness(derived, max_edges);
    TwoGraph witness = associated_two_graph(inner.witness);
    TwoGraphEppaCertificate cert{t, base, std::move(derived), std::move(inner),
                                 std::move(witness), {}};
    cert.embedding = cert.inner.embedding;
    for (int a = 0; a < t.n; ++a)
        for (int b = a + 1; b < t.n; ++b)
            for (int c = b + 1; c < t.n; ++c)
                if (t.has_triple(a, b, c) !=
                    cert.witness.has_triple(cert.embedding[a], cert.embedding[b],
                                            cert.embedding[c]))
                    throw std::logic_error("source two-graph does not embed into the witness");
    return cert;
}

std::vector<int> extend_two_graph_partial(const TwoGraphEppaCertificate& cert,
                                          const PartialMap& phi) {
    if (!is_partial_isomorphism(cert.source, cert.source, phi))
        throw std::invalid_argument("not a partial isomorphism of the source two-graph");
    auto s = find_switch_set(cert.derived, cert.derived, phi);
    if (!s)
        throw std::logic_error("two-graph partial isomorphism has no switch set on the derived graph");
    SwitchingAutomorphism ext =
        extend_switching_iso(cert.inner, SwitchingPartialMap{phi, std::move(*s)});
    return std::move(ext.map);
}

ApaReport apa_counterexample_report() {
    // A = {u,v}, B1 = {u,v,x1} with no triple, B2 = {u,v,x2} with the
    // triple. Amalgam candidates live on vertices u=0, v=1, x1=2, x2=3.
    ApaReport report;
    report.b1 = TwoGraph{3, {}};
    report.b2 = TwoGraph{3, {{{0, 1, 2}}}};

    const std::vector<Triple> slots = {
        make_triple(0, 1, 2), make_triple(0, 1, 3), make_triple(0, 2, 3), make_triple(1, 2, 3)};
    for (unsigned bits = 0; bits < 16; ++bits) {
        std::set<Triple> triples;
        for (int i = 0; i < 4; ++i)
            if ((bits >> i) & 1) triples.insert(slots[i]);
        TwoGraph c{4, triples};
        if (!validate_two_graph(c).ok()) continue;
        if (c.has_triple(0, 1, 2)) continue; // must restrict to B1
        if (!c.has_triple(0, 1, 3)) continue; // must restrict to B2
        ApaCandidate candidate{c, false, ""};
        // g swaps u,v and fixes x1,x2; it respects the pair (f1,f2) iff it
        // is an automorphism of c.
        bool automorphism = c.has_triple(0, 2, 3) == c.has_triple(1, 2, 3);
        candidate.respects_automorphisms = automorphism;
        if (!automorphism)
            candidate.failure = fmt::format(
                "swapping u,v maps triple-status {} of {{u,x1,x2}} onto {} of {{v,x1,x2}}",
                c.has_triple(0, 2, 3), c.has_triple(1, 2, 3));
        report.candidates.push_back(std::move(candidate));
    }
    report.amalgam_exists = !report.candidates.empty();
    for (const auto& cand : report.candidates)
        if (cand.respects_automorphisms) report.apa_holds = true;
    return report;
}

} // namespace eppa
