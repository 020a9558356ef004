#include "eppa/structures.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/core.h>

namespace eppa {

bool PartialMap::well_formed() const {
    if (dom.size() != img.size()) return false;
    auto dup_free = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    return dup_free(dom) && dup_free(img);
}

ValidationReport validate_graph(const Graph& g) {
    ValidationReport report;
    if (g.n < 0) report.add("negative vertex count");
    for (const auto& [u, v] : g.edges) {
        if (u == v) report.add(fmt::format("loop at vertex {}", u));
        if (u > v) report.add(fmt::format("unnormalized edge ({},{})", u, v));
        if (u < 0 || v >= g.n || u >= g.n || v < 0)
            report.add(fmt::format("endpoint out of range in edge ({},{})", u, v));
    }
    return report;
}

ValidationReport validate_two_graph(const TwoGraph& t) {
    ValidationReport report;
    if (t.n < 0) report.add("negative vertex count");
    for (const auto& tr : t.triples) {
        if (tr[0] == tr[1] || tr[1] == tr[2])
            report.add(fmt::format("degenerate triple ({},{},{})", tr[0], tr[1], tr[2]));
        if (tr[0] < 0 || tr[2] >= t.n)
            report.add(fmt::format("vertex out of range in triple ({},{},{})", tr[0], tr[1], tr[2]));
        if (!(tr[0] < tr[1] && tr[1] < tr[2]))
            report.add(fmt::format("unnormalized triple ({},{},{})", tr[0], tr[1], tr[2]));
    }
    if (!report.ok()) return report;
    // even number of triples on every 4-subset
    for (int a = 0; a < t.n; ++a)
        for (int b = a + 1; b < t.n; ++b)
            for (int c = b + 1; c < t.n; ++c)
                for (int e = c + 1; e < t.n; ++e) {
                    int count = t.has_triple(a, b, c) + t.has_triple(a, b, e) +
                                t.has_triple(a, c, e) + t.has_triple(b, c, e);
                    if (count % 2 != 0)
                        report.add(fmt::format("odd triple count on {{{},{},{},{}}}", a, b, c, e));
                }
    return report;
}

ValidationReport validate_antipodal(const AntipodalSpace& a) {
    ValidationReport report;
    if (a.n < 0 || a.d.size() != static_cast<std::size_t>(a.n) * a.n) {
        report.add("distance table size mismatch");
        return report;
    }
    for (int u = 0; u < a.n; ++u) {
        if (a.dist(u, u) != 0) report.add(fmt::format("nonzero self-distance at {}", u));
        for (int v = u + 1; v < a.n; ++v) {
            int duv = a.dist(u, v);
            if (duv < 1 || duv > 3)
                report.add(fmt::format("distance out of range at ({},{})", u, v));
            if (duv != a.dist(v, u))
                report.add(fmt::format("asymmetric distance at ({},{})", u, v));
        }
    }
    if (!report.ok()) return report;
    for (int u = 0; u < a.n; ++u)
        for (int v = u + 1; v < a.n; ++v)
            for (int w = v + 1; w < a.n; ++w) {
                int x = a.dist(u, v), y = a.dist(u, w), z = a.dist(v, w);
                int hi = std::max({x, y, z});
                if (hi > x + y + z - hi)
                    report.add(fmt::format("triangle inequality fails on ({},{},{})", u, v, w));
                int twos = (x == 2) + (y == 2) + (z == 2);
                int threes = (x == 3) + (y == 3) + (z == 3);
                if (twos == 2 && threes == 1)
                    report.add(fmt::format("2-2-3 triangle on ({},{},{})", u, v, w));
            }
    for (int u = 0; u < a.n; ++u) {
        int partners = 0;
        for (int v = 0; v < a.n; ++v)
            if (v != u && a.dist(u, v) == 3) ++partners;
        if (partners != 1)
            report.add(fmt::format("matching fails at vertex {} ({} antipodes)", u, partners));
    }
    return report;
}

int antipode(const AntipodalSpace& a, int v) {
    for (int u = 0; u < a.n; ++u)
        if (u != v && a.dist(u, v) == 3) return u;
    throw std::invalid_argument(fmt::format("vertex {} has no antipode", v));
}

bool is_partial_isomorphism(const Graph& g, const Graph& h, const PartialMap& f) {
    if (!f.well_formed()) return false;
    for (std::size_t i = 0; i < f.dom.size(); ++i) {
        if (f.dom[i] < 0 || f.dom[i] >= g.n || f.img[i] < 0 || f.img[i] >= h.n) return false;
        for (std::size_t j = i + 1; j < f.dom.size(); ++j)
            if (g.has_edge(f.dom[i], f.dom[j]) != h.has_edge(f.img[i], f.img[j])) return false;
    }
    return true;
}

bool is_partial_isomorphism(const TwoGraph& s, const TwoGraph& t, const PartialMap& f) {
    if (!f.well_formed()) return false;
    for (int v : f.dom)
        if (v < 0 || v >= s.n) return false;
    for (int v : f.img)
        if (v < 0 || v >= t.n) return false;
    for (std::size_t i = 0; i < f.dom.size(); ++i)
        for (std::size_t j = i + 1; j < f.dom.size(); ++j)
            for (std::size_t k = j + 1; k < f.dom.size(); ++k)
                if (s.has_triple(f.dom[i], f.dom[j], f.dom[k]) !=
                    t.has_triple(f.img[i], f.img[j], f.img[k]))
                    return false;
    return true;
}

bool is_partial_isomorphism(const AntipodalSpace& a, const AntipodalSpace& b, const PartialMap& f) {
    if (!f.well_formed()) return false;
    for (int v : f.dom)
        if (v < 0 || v >= a.n) return false;
    for (int v : f.img)
        if (v < 0 || v >= b.n) return false;
    for (std::size_t i = 0; i < f.dom.size(); ++i)
        for (std::size_t j = i + 1; j < f.dom.size(); ++j)
            if (a.dist(f.dom[i], f.dom[j]) != b.dist(f.img[i], f.img[j])) return false;
    return true;
}

} // namespace eppa
