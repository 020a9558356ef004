#include "eppa/switching.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/core.h>

namespace eppa {

Graph seidel_switch(const Graph& g, const std::set<int>& s) {
    for (int v : s)
        if (v < 0 || v >= g.n)
            throw std::out_of_range(fmt::format("switch vertex {} out of range", v));
    std::set<Edge> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            bool crossing = (s.count(u) != 0) != (s.count(v) != 0);
            if (g.has_edge(u, v) != crossing) edges.insert({u, v});
        }
    return Graph{g.n, std::move(edges)};
}

TwoGraph associated_two_graph(const Graph& g) {
    std::set<Triple> triples;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c) {
                int count = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c);
                if (count % 2 == 1) triples.insert({a, b, c});
            }
    return TwoGraph{g.n, std::move(triples)};
}

std::optional<std::set<int>> find_switch_set(const Graph& g, const Graph& h, const PartialMap& f) {
    if (!f.well_formed())
        throw std::invalid_argument("partial map is not a bijection");
    for (int v : f.dom)
        if (v < 0 || v >= g.n) throw std::out_of_range("dom vertex out of range");
    for (int v : f.img)
        if (v < 0 || v >= h.n) throw std::out_of_range("img vertex out of range");

    // The constraint graph is complete on dom, so propagation from the
    // minimal vertex of each component settles every variable. Components
    // only matter for |dom| <= 1.
    std::vector<int> dom = f.dom;
    std::sort(dom.begin(), dom.end());
    std::vector<int> value(dom.size(), -1);
    auto constraint = [&](int u, int v) {
        int fu = *f.image_of(u), fv = *f.image_of(v);
        return g.has_edge(u, v) != h.has_edge(fu, fv) ? 1 : 0;
    };

    for (std::size_t root = 0; root < dom.size(); ++root) {
        if (value[root] != -1) continue;
        value[root] = 0; // canonical: minimal vertex unswitched
        for (std::size_t i = root + 1; i < dom.size(); ++i) {
            int want = value[root] ^ constraint(dom[root], dom[i]);
            if (value[i] == -1)
                value[i] = want;
            else if (value[i] != want)
                return std::nullopt;
        }
    }
    // all pairwise constraints must hold, not just those through the root
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i + 1; j < dom.size(); ++j)
            if ((value[i] ^ value[j]) != constraint(dom[i], dom[j])) return std::nullopt;

    std::set<int> s;
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (value[i] == 1) s.insert(dom[i]);
    return s;
}

bool is_switching_isomorphism(const Graph& g, const Graph& h, const PartialMap& f) {
    return find_switch_set(g, h, f).has_value();
}

} // namespace eppa
