#include "eppa/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/core.h>

namespace eppa::oracle {

namespace {

void require_small(int n, int cap, const char* what) {
    if (n > cap)
        throw std::length_error(fmt::format("{} capped at {} vertices, got {}", what, cap, n));
}

// Own copy of the witness distance rules (i)-(iii).
int rule_distance(int n, int e, std::uint64_t chi, int f, std::uint64_t eta) {
    std::uint64_t mask = n == 0 ? 0 : ((std::uint64_t{1} << n) - 1);
    if (e == f && eta == (chi ^ mask)) return 3;
    return (((chi >> f) & 1) == ((eta >> e) & 1)) ? 1 : 2;
}

// Own application of a stored extension (permutation of M plus flip set).
std::pair<int, std::uint64_t> apply_theta(const std::vector<int>& perm,
                                          const std::vector<std::uint64_t>& flips, int e,
                                          std::uint64_t chi) {
    int n = static_cast<int>(perm.size());
    std::uint64_t xi = 0;
    for (int f = 0; f < n; ++f) {
        std::uint64_t bit = ((chi >> f) ^ (flips[e] >> f)) & 1;
        xi |= bit << perm[f];
    }
    return {perm[e], xi};
}

bool is_permutation(const std::vector<int>& map, int n) {
    if (static_cast<int>(map.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int v : map) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

// All injective partial maps of 0..n-1 with |dom| <= max_size, dom sorted,
// in a fixed lexicographic order.
std::vector<PartialMap> all_injections(int n, int max_size, StructureKind kind) {
    std::vector<PartialMap> out;
    std::vector<int> dom, img;
    std::vector<bool> used(n, false);

    auto fill_img = [&](auto&& self, std::size_t pos) -> void {
        if (pos == dom.size()) {
            out.push_back(PartialMap{dom, img, kind});
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            used[w] = true;
            img.push_back(w);
            self(self, pos + 1);
            img.pop_back();
            used[w] = false;
        }
    };

    std::vector<std::vector<int>> doms;
    std::vector<int> cur;
    auto subsets = [&](auto&& self, int next) -> void {
        doms.push_back(cur);
        if (static_cast<int>(cur.size()) == max_size) return;
        for (int v = next; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    subsets(subsets, 0);
    std::sort(doms.begin(), doms.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    for (const auto& d : doms) {
        dom = d;
        img.clear();
        fill_img(fill_img, 0);
    }
    return out;
}

} // namespace

std::vector<Graph> enumerate_graphs(int k) {
    require_small(k, 6, "graph enumeration");
    std::vector<Edge> slots;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) slots.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint32_t bits = 0; bits < (1u << slots.size()); ++bits) {
        std::set<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((bits >> i) & 1) edges.insert(slots[i]);
        out.push_back(Graph{k, std::move(edges)});
    }
    return out;
}

bool satisfies_two_graph_axiom(const TwoGraph& t) {
    for (int a = 0; a < t.n; ++a)
        for (int b = a + 1; b < t.n; ++b)
            for (int c = b + 1; c < t.n; ++c)
                for (int d = c + 1; d < t.n; ++d) {
                    int count = t.has_triple(a, b, c) + t.has_triple(a, b, d) +
                                t.has_triple(a, c, d) + t.has_triple(b, c, d);
                    if (count % 2 == 1) return false;
                }
    return true;
}

std::vector<TwoGraph> enumerate_two_graphs(int k) {
    require_small(k, 6, "two-graph enumeration");
    std::vector<Triple> slots;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c) slots.push_back({a, b, c});
    std::vector<TwoGraph> out;
    for (std::uint32_t bits = 0; bits < (1u << slots.size()); ++bits) {
        std::set<Triple> triples;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((bits >> i) & 1) triples.insert(slots[i]);
        TwoGraph t{k, std::move(triples)};
        if (satisfies_two_graph_axiom(t)) out.push_back(std::move(t));
    }
    return out;
}

bool satisfies_antipodal_axioms(const AntipodalSpace& a) {
    for (int u = 0; u < a.n; ++u)
        for (int v = u + 1; v < a.n; ++v) {
            int d = a.dist(u, v);
            if (d < 1 || d > 3 || a.dist(v, u) != d) return false;
        }
    for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < a.n; ++v)
            for (int w = 0; w < a.n; ++w) {
                if (u == v || v == w || u == w) continue;
                if (a.dist(u, w) > a.dist(u, v) + a.dist(v, w)) return false;
            }
    for (int u = 0; u < a.n; ++u)
        for (int v = u + 1; v < a.n; ++v)
            for (int w = v + 1; w < a.n; ++w) {
                int x = a.dist(u, v), y = a.dist(u, w), z = a.dist(v, w);
                if (x + y + z == 7 && std::max({x, y, z}) == 3) return false; // 2-2-3
            }
    for (int u = 0; u < a.n; ++u) {
        int antipodes = 0;
        for (int v = 0; v < a.n; ++v)
            if (v != u && a.dist(u, v) == 3) ++antipodes;
        if (antipodes != 1) return false;
    }
    return true;
}

std::vector<AntipodalSpace> enumerate_antipodal_spaces(int points) {
    if (points % 2 != 0) throw std::invalid_argument("point count must be even");
    require_small(points, 8, "antipodal enumeration");
    int m = points / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.push_back({i, j});
    std::vector<AntipodalSpace> out;
    for (std::uint32_t bits = 0; bits < (1u << pairs.size()); ++bits) {
        AntipodalSpace a(points);
        for (int i = 0; i < m; ++i) a.set_dist(2 * i, 2 * i + 1, 3);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            int d = ((bits >> k) & 1) ? 1 : 2;
            a.set_dist(2 * i, 2 * j, d);
            a.set_dist(2 * i, 2 * j + 1, 3 - d);
            a.set_dist(2 * i + 1, 2 * j, 3 - d);
            a.set_dist(2 * i + 1, 2 * j + 1, d);
        }
        if (satisfies_antipodal_axioms(a)) out.push_back(std::move(a));
    }
    return out;
}

std::vector<AntipodalSpace> enumerate_antipodal_spaces_filter(int points) {
    if (points % 2 != 0) throw std::invalid_argument("point count must be even");
    require_small(points, 6, "antipodal filter enumeration");
    std::vector<std::pair<int, int>> cross;
    for (int u = 0; u < points; ++u)
        for (int v = u + 1; v < points; ++v)
            if (v != u + 1 || u % 2 != 0) cross.push_back({u, v});
    std::vector<AntipodalSpace> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cross.size(); ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        AntipodalSpace a(points);
        for (int i = 0; i < points / 2; ++i) a.set_dist(2 * i, 2 * i + 1, 3);
        std::uint64_t c = code;
        for (const auto& [u, v] : cross) {
            a.set_dist(u, v, static_cast<int>(c % 3) + 1);
            c /= 3;
        }
        if (satisfies_antipodal_axioms(a)) out.push_back(std::move(a));
    }
    return out;
}

namespace {

template <typename Preserves>
std::vector<std::vector<int>> automorphisms_by_filter(int n, Preserves&& preserves) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (preserves(perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

std::vector<std::vector<int>> all_automorphisms(const Graph& g) {
    require_small(g.n, 8, "automorphism enumeration");
    return automorphisms_by_filter(g.n, [&](const std::vector<int>& p) {
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                if (g.has_edge(u, v) != g.has_edge(p[u], p[v])) return false;
        return true;
    });
}

std::vector<std::vector<int>> all_automorphisms(const TwoGraph& t) {
    require_small(t.n, 8, "automorphism enumeration");
    return automorphisms_by_filter(t.n, [&](const std::vector<int>& p) {
        for (int a = 0; a < t.n; ++a)
            for (int b = a + 1; b < t.n; ++b)
                for (int c = b + 1; c < t.n; ++c)
                    if (t.has_triple(a, b, c) != t.has_triple(p[a], p[b], p[c])) return false;
        return true;
    });
}

std::vector<std::vector<int>> all_automorphisms(const AntipodalSpace& a) {
    require_small(a.n, 8, "automorphism enumeration");
    return automorphisms_by_filter(a.n, [&](const std::vector<int>& p) {
        for (int u = 0; u < a.n; ++u)
            for (int v = u + 1; v < a.n; ++v)
                if (a.dist(u, v) != a.dist(p[u], p[v])) return false;
        return true;
    });
}

std::vector<PartialMap> all_partial_isomorphisms(const Graph& g, int max_size) {
    require_small(g.n, 8, "partial isomorphism enumeration");
    std::vector<PartialMap> out;
    for (auto& f : all_injections(g.n, max_size, StructureKind::graph)) {
        bool ok = true;
        for (std::size_t i = 0; i < f.dom.size() && ok; ++i)
            for (std::size_t j = i + 1; j < f.dom.size() && ok; ++j)
                ok = g.has_edge(f.dom[i], f.dom[j]) == g.has_edge(f.img[i], f.img[j]);
        if (ok) out.push_back(std::move(f));
    }
    return out;
}

std::vector<PartialMap> all_partial_isomorphisms(const TwoGraph& t, int max_size) {
    require_small(t.n, 8, "partial isomorphism enumeration");
    std::vector<PartialMap> out;
    for (auto& f : all_injections(t.n, max_size, StructureKind::two_graph)) {
        bool ok = true;
        for (std::size_t i = 0; i < f.dom.size() && ok; ++i)
            for (std::size_t j = i + 1; j < f.dom.size() && ok; ++j)
                for (std::size_t k = j + 1; k < f.dom.size() && ok; ++k)
                    ok = t.has_triple(f.dom[i], f.dom[j], f.dom[k]) ==
                         t.has_triple(f.img[i], f.img[j], f.img[k]);
        if (ok) out.push_back(std::move(f));
    }
    return out;
}

std::vector<PartialMap> all_partial_isomorphisms(const AntipodalSpace& a, int max_size) {
    require_small(a.n, 8, "partial isomorphism enumeration");
    std::vector<PartialMap> out;
    for (auto& f : all_injections(a.n, max_size, StructureKind::antipodal)) {
        bool ok = true;
        for (std::size_t i = 0; i < f.dom.size() && ok; ++i)
            for (std::size_t j = i + 1; j < f.dom.size() && ok; ++j)
                ok = a.dist(f.dom[i], f.dom[j]) == a.dist(f.img[i], f.img[j]);
        if (ok) out.push_back(std::move(f));
    }
    return out;
}

std::vector<PartialMap> antipode_closed_partial_isomorphisms(const AntipodalSpace& a) {
    std::vector<int> mate(a.n, -1);
    for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < a.n; ++v)
            if (v != u && a.dist(u, v) == 3) mate[u] = v;
    std::vector<PartialMap> out;
    for (auto& f : all_partial_isomorphisms(a, a.n)) {
        bool closed = true;
        for (std::size_t i = 0; i < f.dom.size() && closed; ++i)
            closed = f.contains(mate[f.dom[i]]) &&
                     f.preimage_of(mate[f.img[i]]).has_value();
        if (closed) out.push_back(std::move(f));
    }
    return out;
}

std::vector<SwitchingPartialMap> all_switching_partial_isomorphisms(const Graph& g, int max_size) {
    require_small(g.n, 8, "switching partial isomorphism enumeration");
    std::vector<SwitchingPartialMap> out;
    for (const auto& f : all_injections(g.n, max_size, StructureKind::graph)) {
        std::size_t k = f.dom.size();
        for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
            std::set<int> s;
            for (std::size_t i = 0; i < k; ++i)
                if ((bits >> i) & 1) s.insert(f.dom[i]);
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i)
                for (std::size_t j = i + 1; j < k && ok; ++j) {
                    bool crossing = (s.count(f.dom[i]) != 0) != (s.count(f.dom[j]) != 0);
                    ok = (g.has_edge(f.dom[i], f.dom[j]) != crossing) ==
                         g.has_edge(f.img[i], f.img[j]);
                }
            if (ok) out.push_back(SwitchingPartialMap{f, std::move(s)});
        }
    }
    return out;
}

VerifyReport verify_witness_antipodal(const AntipodalSpace& a) {
    VerifyReport report;
    WitnessContext ctx = build_witness(a);
    AntipodalSpace b = ctx.materialize();
    ++report.checked;
    if (!satisfies_antipodal_axioms(b))
        report.failures.push_back("materialized witness violates the antipodal axioms");
    std::uint64_t expected =
        static_cast<std::uint64_t>(ctx.num_edges()) << ctx.num_edges();
    if (static_cast<std::uint64_t>(b.n) != expected)
        report.failures.push_back(
            fmt::format("witness has {} vertices, expected {}", b.n, expected));
    return report;
}

VerifyReport verify_eppa_antipodal(const AntipodalSpace& a) {
    VerifyReport report;
    WitnessContext ctx = build_witness(a);
    int n = ctx.num_edges();
    std::uint64_t size = ctx.witness_size();
    for (const auto& phi : antipode_closed_partial_isomorphisms(a)) {
        ++report.checked;
        WitnessAutomorphism theta = extend_automorphism(ctx, phi);
        if (!is_permutation(theta.edge_perm, n)) {
            report.failures.push_back("edge permutation is not a permutation");
            continue;
        }
        for (std::size_t i = 0; i < phi.dom.size(); ++i) {
            WitnessVertex u = ctx.psi(phi.dom[i]);
            auto [e, chi] = apply_theta(theta.edge_perm, theta.flips, u.edge, u.chi);
            WitnessVertex w = ctx.psi(phi.img[i]);
            if (e != w.edge || chi != w.chi)
                report.failures.push_back(
                    fmt::format("extension disagrees with the map at vertex {}", phi.dom[i]));
        }
        std::set<std::pair<int, std::uint64_t>> images;
        for (std::uint64_t iu = 0; iu < size; ++iu) {
            WitnessVertex u = ctx.vertex_at(iu);
            images.insert(apply_theta(theta.edge_perm, theta.flips, u.edge, u.chi));
        }
        if (images.size() != size)
            report.failures.push_back("extension is not injective on the witness");
        for (std::uint64_t iu = 0; iu < size; ++iu)
            for (std::uint64_t iv = iu + 1; iv < size; ++iv) {
                WitnessVertex u = ctx.vertex_at(iu), v = ctx.vertex_at(iv);
                auto [eu, cu] = apply_theta(theta.edge_perm, theta.flips, u.edge, u.chi);
                auto [ev, cv] = apply_theta(theta.edge_perm, theta.flips, v.edge, v.chi);
                if (rule_distance(n, u.edge, u.chi, v.edge, v.chi) !=
                    rule_distance(n, eu, cu, ev, cv)) {
                    report.failures.push_back("extension is not distance-preserving");
                    iu = size;
                    break;
                }
            }
    }
    return report;
}

VerifyReport verify_coherence_antipodal(const AntipodalSpace& a, long max_triples) {
    VerifyReport report;
    WitnessContext ctx = build_witness(a);
    std::uint64_t size = ctx.witness_size();
    auto maps = antipode_closed_partial_isomorphisms(a);
    for (const auto& f : maps) {
        std::set<int> range_f(f.img.begin(), f.img.end());
        for (const auto& g : maps) {
            if (std::set<int>(g.dom.begin(), g.dom.end()) != range_f) continue;
            if (max_triples >= 0 && report.checked >= max_triples) return report;
            PartialMap h{f.dom, {}, StructureKind::antipodal};
            for (int v : f.img) h.img.push_back(*g.image_of(v));
            ++report.checked;
            WitnessAutomorphism tf = extend_automorphism(ctx, f);
            WitnessAutomorphism tg = extend_automorphism(ctx, g);
            WitnessAutomorphism th = extend_automorphism(ctx, h);
            for (std::uint64_t iu = 0; iu < size; ++iu) {
                WitnessVertex u = ctx.vertex_at(iu);
                auto [e1, c1] = apply_theta(tf.edge_perm, tf.flips, u.edge, u.chi);
                auto [e2, c2] = apply_theta(tg.edge_perm, tg.flips, e1, c1);
                auto [eh, ch] = apply_theta(th.edge_perm, th.flips, u.edge, u.chi);
                if (e2 != eh || c2 != ch) {
                    report.failures.push_back(fmt::format(
                        "coherence fails at witness vertex ({},{:#x})", u.edge, u.chi));
                    break;
                }
            }
        }
    }
    return report;
}

VerifyReport verify_pode_preservation(const AntipodalSpace& a) {
    VerifyReport report;
    WitnessContext ctx = build_witness(a);
    const auto& pode = ctx.pode();
    std::uint64_t size = ctx.witness_size();
    for (const auto& phi : antipode_closed_partial_isomorphisms(a)) {
        bool preserves = true;
        for (std::size_t i = 0; i < phi.dom.size(); ++i)
            if (pode[phi.dom[i]] != pode[phi.img[i]]) preserves = false;
        if (!preserves) continue;
        ++report.checked;
        WitnessAutomorphism theta = extend_automorphism(ctx, phi);
        for (std::size_t e = 0; e < theta.flips.size(); ++e)
            if ((theta.flips[e] >> e) & 1)
                report.failures.push_back(fmt::format("singleton flip at edge {}", e));
        for (std::uint64_t iu = 0; iu < size; ++iu) {
            WitnessVertex u = ctx.vertex_at(iu);
            auto [e, chi] = apply_theta(theta.edge_perm, theta.flips, u.edge, u.chi);
            if (((u.chi >> u.edge) & 1) != ((chi >> e) & 1)) {
                report.failures.push_back("extension does not preserve the pode function");
                break;
            }
        }
    }
    return report;
}

VerifyReport verify_eppa_graph(const Graph& g) {
    VerifyReport report;
    SwitchingEppaCertificate cert = switching_eppa_witness(g);
    const Graph& h = cert.witness;

    for (const auto& phi : all_partial_isomorphisms(g, g.n)) {
        ++report.checked;
        std::vector<int> map = extend_plain_iso(cert, phi);
        if (!is_permutation(map, h.n)) {
            report.failures.push_back("plain extension is not a permutation of H");
            continue;
        }
        for (int u = 0; u < h.n; ++u)
            for (int v = u + 1; v < h.n; ++v)
                if (h.has_edge(u, v) != h.has_edge(map[u], map[v])) {
                    report.failures.push_back("plain extension is not an automorphism of H");
                    u = h.n;
                    break;
                }
        for (std::size_t i = 0; i < phi.dom.size(); ++i)
            if (map[cert.embedding[phi.dom[i]]] != cert.embedding[phi.img[i]])
                report.failures.push_back("plain extension does not extend the partial map");
    }

    for (const auto& sphi : all_switching_partial_isomorphisms(g, g.n)) {
        ++report.checked;
        SwitchingAutomorphism ext = extend_switching_iso(cert, sphi);
        if (!is_permutation(ext.map, h.n)) {
            report.failures.push_back("switching extension is not a permutation of H");
            continue;
        }
        for (int u = 0; u < h.n; ++u)
            for (int v = u + 1; v < h.n; ++v) {
                bool crossing = (ext.switch_set.count(u) != 0) != (ext.switch_set.count(v) != 0);
                if ((h.has_edge(u, v) != crossing) != h.has_edge(ext.map[u], ext.map[v])) {
                    report.failures.push_back(
                        "switching extension is not a switching automorphism of H");
                    u = h.n;
                    break;
                }
            }
        for (std::size_t i = 0; i < sphi.map.dom.size(); ++i)
            if (ext.map[cert.embedding[sphi.map.dom[i]]] != cert.embedding[sphi.map.img[i]])
                report.failures.push_back("switching extension does not extend the partial map");
    }
    return report;
}

VerifyReport verify_eppa_two_graph(const TwoGraph& t) {
    VerifyReport report;
    TwoGraphEppaCertificate cert = two_graph_eppa_witness(t);
    const TwoGraph& th = cert.witness;
    for (const auto& phi : all_partial_isomorphisms(t, t.n)) {
        ++report.checked;
        std::vector<int> map = extend_two_graph_partial(cert, phi);
        if (!is_permutation(map, th.n)) {
            report.failures.push_back("extension is not a permutation of T(H)");
            continue;
        }
        bool automorphism = true;
        for (int a = 0; a < th.n && automorphism; ++a)
            for (int b = a + 1; b < th.n && automorphism; ++b)
                for (int c = b + 1; c < th.n && automorphism; ++c)
                    automorphism = th.has_triple(a, b, c) == th.has_triple(map[a], map[b], map[c]);
        if (!automorphism)
            report.failures.push_back("extension is not an automorphism of T(H)");
        for (std::size_t i = 0; i < phi.dom.size(); ++i)
            if (map[cert.embedding[phi.dom[i]]] != cert.embedding[phi.img[i]])
                report.failures.push_back("extension does not extend the partial map");
    }
    return report;
}

CoherenceMeasurement measure_two_graph_coherence(const TwoGraph& t) {
    CoherenceMeasurement result;
    TwoGraphEppaCertificate cert = two_graph_eppa_witness(t);
    auto maps = all_partial_isomorphisms(t, t.n);
    for (const auto& f : maps) {
        std::set<int> range_f(f.img.begin(), f.img.end());
        for (const auto& g : maps) {
            if (std::set<int>(g.dom.begin(), g.dom.end()) != range_f) continue;
            PartialMap h{f.dom, {}, StructureKind::two_graph};
            for (int v : f.img) h.img.push_back(*g.image_of(v));
            ++result.triples;
            std::vector<int> tf = extend_two_graph_partial(cert, f);
            std::vector<int> tg = extend_two_graph_partial(cert, g);
            std::vector<int> th = extend_two_graph_partial(cert, h);
            for (std::size_t v = 0; v < th.size(); ++v)
                if (th[v] != tg[tf[v]]) {
                    ++result.violations;
                    break;
                }
        }
    }
    return result;
}

} // namespace eppa::oracle
