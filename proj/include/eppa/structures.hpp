#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eppa {

// Vertices are dense indices 0..n-1. All structures are immutable values
// after construction; validators report every violation instead of failing
// fast so the CLI can explain rejected inputs.

using Edge = std::pair<int, int>;  // normalized u < v
using Triple = std::array<int, 3>; // normalized ascending

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

inline Triple make_triple(int a, int b, int c) {
    Triple t{a, b, c};
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    if (t[1] > t[2]) std::swap(t[1], t[2]);
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    return t;
}

struct Graph {
    int n = 0;
    std::set<Edge> edges;

    Graph() = default;
    Graph(int n_, std::set<Edge> edges_) : n(n_), edges(std::move(edges_)) {}

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return edges.count(make_edge(u, v)) != 0;
    }

    bool operator==(const Graph&) const = default;
    auto operator<=>(const Graph&) const = default;
};

/// 3-uniform hypergraph; valid instances carry an even number of triples
/// on every four vertices.
struct TwoGraph {
    int n = 0;
    std::set<Triple> triples;

    TwoGraph() = default;
    TwoGraph(int n_, std::set<Triple> triples_) : n(n_), triples(std::move(triples_)) {}

    bool has_triple(int a, int b, int c) const {
        return triples.count(make_triple(a, b, c)) != 0;
    }

    bool operator==(const TwoGraph&) const = default;
    auto operator<=>(const TwoGraph&) const = default;
};

/// Complete edge-labelled graph with distances in {1,2,3}. Valid instances
/// satisfy the triangle inequality, have no 2-2-3 triangle, and their
/// distance-3 edges form a perfect matching.
struct AntipodalSpace {
    int n = 0;
    std::vector<std::uint8_t> d; // n*n, symmetric, zero diagonal

    AntipodalSpace() = default;
    explicit AntipodalSpace(int n_) : n(n_), d(static_cast<std::size_t>(n_) * n_, 0) {}

    int dist(int u, int v) const {
        return d[static_cast<std::size_t>(u) * n + v];
    }

    void set_dist(int u, int v, int value) {
        d[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(value);
        d[static_cast<std::size_t>(v) * n + u] = static_cast<std::uint8_t>(value);
    }

    bool operator==(const AntipodalSpace&) const = default;
    auto operator<=>(const AntipodalSpace&) const = default;
};

enum class StructureKind { graph, two_graph, antipodal };

/// A partial bijection between vertex sets, stored as parallel ordered
/// lists so restriction and composition stay deterministic.
struct PartialMap {
    std::vector<int> dom;
    std::vector<int> img;
    StructureKind kind = StructureKind::graph;

    PartialMap() = default;
    PartialMap(std::vector<int> dom_, std::vector<int> img_,
               StructureKind kind_ = StructureKind::graph)
        : dom(std::move(dom_)), img(std::move(img_)), kind(kind_) {}

    std::size_t size() const { return dom.size(); }

    bool contains(int v) const {
        for (int x : dom)
            if (x == v) return true;
        return false;
    }

    /// Image of v, or nullopt when v is outside dom.
    std::optional<int> image_of(int v) const {
        for (std::size_t i = 0; i < dom.size(); ++i)
            if (dom[i] == v) return img[i];
        return std::nullopt;
    }

    std::optional<int> preimage_of(int v) const {
        for (std::size_t i = 0; i < img.size(); ++i)
            if (img[i] == v) return dom[i];
        return std::nullopt;
    }

    /// dom and img are duplicate-free and of equal length.
    bool well_formed() const;

    bool operator==(const PartialMap&) const = default;
};

struct SwitchingPartialMap {
    PartialMap map;
    std::set<int> switch_set; // subset of map.dom
};

struct ValidationReport {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
    void add(std::string issue) { issues.push_back(std::move(issue)); }
};

ValidationReport validate_graph(const Graph& g);
ValidationReport validate_two_graph(const TwoGraph& t);
ValidationReport validate_antipodal(const AntipodalSpace& a);

/// The unique vertex at distance 3 from v. Requires a valid space.
int antipode(const AntipodalSpace& a, int v);

/// True when f preserves the structure it is declared for, restricted to
/// the induced substructures on dom and img.
bool is_partial_isomorphism(const Graph& g, const Graph& h, const PartialMap& f);
bool is_partial_isomorphism(const TwoGraph& s, const TwoGraph& t, const PartialMap& f);
bool is_partial_isomorphism(const AntipodalSpace& a, const AntipodalSpace& b, const PartialMap& f);

} // namespace eppa
