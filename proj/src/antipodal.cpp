#include "eppa/antipodal.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/core.h>

namespace eppa {

bool is_pode_labelling(const AntipodalSpace& a, const PodeLabelling& p) {
    if (static_cast<int>(p.size()) != a.n) return false;
    for (int v = 0; v < a.n; ++v) {
        if (p[v] != 0 && p[v] != 1) return false;
        if (p[v] != 1 - p[antipode(a, v)]) return false;
    }
    return true;
}

std::vector<Edge> matching_edges(const AntipodalSpace& a) {
    std::vector<Edge> edges;
    for (int u = 0; u < a.n; ++u)
        for (int v = u + 1; v < a.n; ++v)
            if (a.dist(u, v) == 3) edges.push_back({u, v});
    // pairs were generated sorted by minimal vertex already
    return edges;
}

std::pair<AntipodalSpace, PodeLabelling> double_cover(const Graph& g) {
    AntipodalSpace a(2 * g.n);
    for (int x = 0; x < g.n; ++x) {
        a.set_dist(2 * x, 2 * x + 1, 3);
        for (int y = x + 1; y < g.n; ++y)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    bool same_pode = i == j;
                    int d = (g.has_edge(x, y) == same_pode) ? 1 : 2;
                    a.set_dist(2 * x + i, 2 * y + j, d);
                }
    }
    PodeLabelling p(a.n);
    for (int x = 0; x < g.n; ++x) {
        p[2 * x] = 0;
        p[2 * x + 1] = 1;
    }
    return {std::move(a), std::move(p)};
}

PodeGraphResult pode_graph(const AntipodalSpace& a, const PodeLabelling& p) {
    if (!is_pode_labelling(a, p))
        throw std::invalid_argument("invalid pode labelling");
    PodeGraphResult result;
    result.from_space.assign(a.n, -1);
    for (int v = 0; v < a.n; ++v)
        if (p[v] == 0) {
            result.from_space[v] = static_cast<int>(result.to_space.size());
            result.to_space.push_back(v);
        }
    int m = static_cast<int>(result.to_space.size());
    std::set<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (a.dist(result.to_space[i], result.to_space[j]) == 1) edges.insert({i, j});
    result.graph = Graph{m, std::move(edges)};
    return result;
}

TwoGraph two_graph_of_antipodal(const AntipodalSpace& a) {
    auto report = validate_antipodal(a);
    if (!report.ok())
        throw std::invalid_argument("invalid antipodal space: " + report.issues.front());
    auto edges = matching_edges(a);
    int m = static_cast<int>(edges.size());
    std::set<Triple> triples;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                // Walk the distance-1 graph on the six points; it is
                // 2-regular, so the component of one point has size 3
                // (two triangles) or 6 (one 6-cycle).
                std::vector<int> points = {edges[i].first,  edges[i].second,
                                           edges[j].first,  edges[j].second,
                                           edges[k].first,  edges[k].second};
                std::vector<int> stack = {points[0]};
                std::set<int> seen = {points[0]};
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int v : points)
                        if (a.dist(u, v) == 1 && seen.insert(v).second) stack.push_back(v);
                }
                if (seen.size() == 3) triples.insert({i, j, k});
            }
    return TwoGraph{m, std::move(triples)};
}

Graph graph_of_two_graph(const TwoGraph& t, int base) {
    if (base < 0 || base >= t.n)
        throw std::out_of_range(fmt::format("base vertex {} out of range", base));
    std::set<Edge> edges;
    for (const auto& tr : t.triples)
        if (tr[0] == base || tr[1] == base || tr[2] == base) {
            std::vector<int> others;
            for (int v : tr)
                if (v != base) others.push_back(v);
            edges.insert(make_edge(others[0], others[1]));
        }
    return Graph{t.n, std::move(edges)};
}

LiftResult lift_two_graph_isomorphism(const AntipodalSpace& a1, const AntipodalSpace& a2,
                                      const PartialMap& beta) {
    LiftResult result;
    auto m1 = matching_edges(a1);
    auto m2 = matching_edges(a2);
    int m = static_cast<int>(m1.size());
    if (m1.size() != m2.size()) {
        result.reason = "unliftable: spaces have different sizes";
        return result;
    }
    if (!beta.well_formed() || beta.size() != m1.size()) {
        result.reason = "unliftable: beta is not a total bijection of matching edges";
        return result;
    }
    std::vector<int> bimg(m, -1);
    for (std::size_t i = 0; i < beta.dom.size(); ++i) {
        if (beta.dom[i] < 0 || beta.dom[i] >= m || beta.img[i] < 0 || beta.img[i] >= m) {
            result.reason = "unliftable: beta index out of range";
            return result;
        }
        bimg[beta.dom[i]] = beta.img[i];
    }

    auto one1 = [&](int i, int j) { return a1.dist(m1[i].first, m1[j].first) == 1 ? 1 : 0; };
    auto one2 = [&](int i, int j) { return a2.dist(m2[i].first, m2[j].first) == 1 ? 1 : 0; };
    auto constraint = [&](int i, int j) { return one1(i, j) ^ one2(bimg[i], bimg[j]); };

    // endpoint choice per matching edge: minimal edge of each component gets 0
    std::vector<int> choice(m, -1);
    for (int root = 0; root < m; ++root) {
        if (choice[root] != -1) continue;
        choice[root] = 0;
        for (int i = root + 1; i < m; ++i)
            if (choice[i] == -1) choice[i] = choice[root] ^ constraint(root, i);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if ((choice[i] ^ choice[j]) != constraint(i, j)) {
                result.conflict_cycle = {0, i, j};
                result.reason = fmt::format(
                    "unliftable: parity contradiction around matching edges (0, {}, {})", i, j);
                return result;
            }

    std::vector<int> dom, img;
    for (int i = 0; i < m; ++i) {
        auto [u0, u1] = m1[i];
        auto [v0, v1] = m2[bimg[i]];
        dom.push_back(u0);
        img.push_back(choice[i] == 0 ? v0 : v1);
        dom.push_back(u1);
        img.push_back(choice[i] == 0 ? v1 : v0);
    }
    result.alpha = PartialMap{std::move(dom), std::move(img), StructureKind::antipodal};
    if (!is_partial_isomorphism(a1, a2, result.alpha))
        throw std::logic_error("lift produced a non-isomorphism");
    result.ok = true;
    return result;
}

} // namespace eppa
