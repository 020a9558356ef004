#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "eppa/io.hpp"
#include "eppa/oracle.hpp"

using nlohmann::json;
using namespace eppa;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

int materialize_limit() {
    if (const char* env = std::getenv("EPPA_MATERIALIZE_LIMIT")) return std::atoi(env);
    return 12;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_valid(const ValidationReport& report, const std::string& what) {
    if (report.ok()) return;
    std::string msg = "invalid " + what + ":";
    for (const auto& issue : report.issues) msg += "\n  " + issue;
    throw SemanticError(msg);
}

Graph load_graph(const std::string& path) {
    Graph g = parse_graph(read_file(path));
    require_valid(validate_graph(g), "graph");
    return g;
}

TwoGraph load_two_graph(const std::string& path) {
    TwoGraph t = parse_two_graph(read_file(path));
    require_valid(validate_two_graph(t), "two-graph");
    return t;
}

AntipodalSpace load_antipodal(const std::string& path) {
    AntipodalSpace a = parse_antipodal(read_file(path));
    require_valid(validate_antipodal(a), "antipodal space");
    return a;
}

SwitchingPartialMap load_map(const std::string& path) {
    return parse_partial_map(read_file(path));
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    return {{"kind", "graph"}, {"n", g.n}, {"edges", edges}};
}

json to_json(const TwoGraph& t) {
    json triples = json::array();
    for (const auto& tr : t.triples) triples.push_back({tr[0], tr[1], tr[2]});
    return {{"kind", "twograph"}, {"n", t.n}, {"triples", triples}};
}

json to_json(const AntipodalSpace& a) {
    json rows = json::array();
    for (int u = 0; u < a.n; ++u) {
        json row = json::array();
        for (int v = u + 1; v < a.n; ++v) row.push_back(a.dist(u, v));
        rows.push_back(row);
    }
    return {{"kind", "antipodal"}, {"n", a.n}, {"upper_triangle", rows}};
}

json map_to_json(const PartialMap& f) {
    json pairs = json::array();
    for (std::size_t i = 0; i < f.dom.size(); ++i) pairs.push_back({f.dom[i], f.img[i]});
    return pairs;
}

void emit(bool as_json, const json& payload, const std::string& text) {
    if (as_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

std::string serialize_total_map(const std::vector<int>& map) {
    std::ostringstream out;
    out << "map " << map.size() << "\n";
    for (std::size_t v = 0; v < map.size(); ++v) out << v << " " << map[v] << "\n";
    return out.str();
}

// Random antipode-closed partial isomorphism of a, or nullopt when the
// sampled candidate is not an isometry.
std::optional<PartialMap> sample_partial_iso(const AntipodalSpace& a, std::mt19937_64& rng) {
    auto edges = matching_edges(a);
    int n = static_cast<int>(edges.size());
    if (n == 0) return PartialMap{{}, {}, StructureKind::antipodal};
    std::uniform_int_distribution<int> size_dist(0, n);
    int k = size_dist(rng);
    std::vector<int> sources(n), targets(n);
    std::iota(sources.begin(), sources.end(), 0);
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(sources.begin(), sources.end(), rng);
    std::shuffle(targets.begin(), targets.end(), rng);
    PartialMap f{{}, {}, StructureKind::antipodal};
    for (int i = 0; i < k; ++i) {
        bool flip = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        auto [su, sv] = edges[sources[i]];
        auto [tu, tv] = edges[targets[i]];
        f.dom.push_back(su);
        f.img.push_back(flip ? tv : tu);
        f.dom.push_back(sv);
        f.img.push_back(flip ? tu : tv);
    }
    if (!is_partial_isomorphism(a, a, f)) return std::nullopt;
    return f;
}

struct CommandContext {
    bool as_json = false;
    std::uint64_t seed = 0;
};

json flips_to_json(const WitnessAutomorphism& theta) {
    json flips = json::array();
    int n = static_cast<int>(theta.edge_perm.size());
    for (int e = 0; e < n; ++e)
        for (int f = e; f < n; ++f)
            if ((theta.flips[e] >> f) & 1) flips.push_back({e, f});
    return flips;
}

std::string flips_to_text(const WitnessAutomorphism& theta) {
    std::ostringstream out;
    out << "flips";
    int n = static_cast<int>(theta.edge_perm.size());
    for (int e = 0; e < n; ++e)
        for (int f = e; f < n; ++f)
            if ((theta.flips[e] >> f) & 1) out << " {" << e << "," << f << "}";
    out << "\n";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent EPPA witnesses for antipodal metric spaces, switching classes and two-graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);

    CommandContext ctx;
    app.add_flag("--json", ctx.as_json, "machine-readable JSON output");
    app.add_option("--seed", ctx.seed, "seed for randomized commands")->default_val(0);

    std::string path, path2, path3, map_path, cert_path, out_path;
    std::vector<int> set_args;
    int base = 0;
    int samples = 200;
    bool exhaustive = false, materialize = false, flip_pode = false;
    std::vector<int> switch_args;

    auto* sw = app.add_subcommand("switch", "Seidel switching of a graph");
    sw->add_option("file", path)->required();
    sw->add_option("--set", set_args, "vertices to switch");

    auto* tg_of = app.add_subcommand("two-graph-of", "associated two-graph T(G)");
    tg_of->add_option("file", path)->required();

    auto* fsw = app.add_subcommand("find-switch", "canonical switch set for a partial map");
    fsw->add_option("g-file", path)->required();
    fsw->add_option("h-file", path2)->required();
    fsw->add_option("map", map_path)->required();

    auto* dc = app.add_subcommand("double-cover", "antipodal double cover of a graph");
    dc->add_option("file", path)->required();

    auto* pg = app.add_subcommand("pode-graph", "graph on the pode-0 vertices");
    pg->add_option("file", path)->required();
    pg->add_flag("--flip", flip_pode, "use the complementary pode labelling");

    auto* tga = app.add_subcommand("two-graph-of-antipodal", "two-graph on the matching edges");
    tga->add_option("file", path)->required();

    auto* gtg = app.add_subcommand("graph-of-two-graph", "graph with T(G) = T");
    gtg->add_option("file", path)->required();
    gtg->add_option("--base", base, "base vertex")->default_val(0);

    auto* lift_cmd = app.add_subcommand("lift", "lift a two-graph isomorphism to the spaces");
    lift_cmd->add_option("a1", path)->required();
    lift_cmd->add_option("a2", path2)->required();
    lift_cmd->add_option("beta", map_path)->required();

    auto* witness = app.add_subcommand("witness", "the coherent EPPA witness");
    witness->require_subcommand(1);
    auto* wbuild = witness->add_subcommand("build", "context manifest: M order, psi, pode rule");
    wbuild->add_option("file", path)->required();
    auto* wdist = witness->add_subcommand("distance", "distance of two witness vertices");
    wdist->add_option("file", path)->required();
    int we1 = 0, we2 = 0;
    std::uint64_t wchi1 = 0, wchi2 = 0;
    wdist->add_option("e1", we1)->required();
    wdist->add_option("chi1", wchi1)->required();
    wdist->add_option("e2", we2)->required();
    wdist->add_option("chi2", wchi2)->required();
    auto* wextend = witness->add_subcommand("extend", "extend a partial isomorphism");
    wextend->add_option("file", path)->required();
    wextend->add_option("map", map_path)->required();
    wextend->add_flag("--materialize", materialize, "also print the full vertex permutation");
    auto* wverify = witness->add_subcommand("verify", "verify the witness construction");
    wverify->add_option("file", path)->required();
    wverify->add_flag("--exhaustive", exhaustive, "all antipode-closed partial isomorphisms");
    wverify->add_option("--samples", samples, "random partial isomorphisms")->default_val(200);

    auto* eppa_cmd = app.add_subcommand("eppa", "build an EPPA certificate manifest");
    eppa_cmd->require_subcommand(1);
    auto* eppa_graph = eppa_cmd->add_subcommand("graph", "witness for switching isomorphisms");
    eppa_graph->add_option("file", path)->required();
    eppa_graph->add_option("--out", out_path, "write the manifest to a file");
    auto* eppa_tg = eppa_cmd->add_subcommand("two-graph", "witness for a two-graph");
    eppa_tg->add_option("file", path)->required();
    eppa_tg->add_option("--out", out_path, "write the manifest to a file");

    auto* extend_cmd = app.add_subcommand("extend", "extend a partial map through a certificate");
    extend_cmd->add_option("--cert", cert_path)->required();
    extend_cmd->add_option("--map", map_path)->required();
    extend_cmd->add_option("--switch", switch_args, "switch set (graph certificates)");

    auto* apa = app.add_subcommand("apa-demo", "machine-checked APA failure for two-graphs");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    oracle_cmd->require_subcommand(1);
    std::string kind;
    int size = 0;
    auto* oenum = oracle_cmd->add_subcommand("enumerate", "stream all labeled structures");
    oenum->add_option("kind", kind, "graph|twograph|antipodal")->required();
    oenum->add_option("size", size)->required();
    auto* overify = oracle_cmd->add_subcommand("verify-eppa", "exhaustive EPPA verification");
    overify->add_option("kind", kind, "graph|twograph|antipodal")->required();
    overify->add_option("size", size)->required();
    std::string pipeline = "antipodal";
    auto* ocoh = oracle_cmd->add_subcommand("verify-coherence", "coherence verification");
    ocoh->add_option("size", size)->required();
    ocoh->add_option("--pipeline", pipeline, "antipodal|two-graph")->default_val("antipodal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*sw) {
            Graph g = load_graph(path);
            std::set<int> s(set_args.begin(), set_args.end());
            Graph out = seidel_switch(g, s);
            emit(ctx.as_json, to_json(out), serialize(out));
        } else if (*tg_of) {
            TwoGraph t = associated_two_graph(load_graph(path));
            emit(ctx.as_json, to_json(t), serialize(t));
        } else if (*fsw) {
            Graph g = load_graph(path), h = load_graph(path2);
            SwitchingPartialMap m = load_map(map_path);
            auto s = find_switch_set(g, h, m.map);
            if (ctx.as_json) {
                json payload = {{"found", s.has_value()}};
                if (s) payload["switch_set"] = json(*s);
                std::cout << payload.dump(2) << "\n";
            } else if (s) {
                std::cout << "switch";
                for (int v : *s) std::cout << " " << v;
                std::cout << "\n";
            } else {
                std::cout << "none\n";
            }
        } else if (*dc) {
            auto [a, p] = double_cover(load_graph(path));
            json payload = to_json(a);
            payload["pode"] = json(p);
            emit(ctx.as_json, payload, serialize(a));
        } else if (*pg) {
            AntipodalSpace a = load_antipodal(path);
            PodeLabelling p(a.n, 0);
            for (const auto& [u, v] : matching_edges(a)) {
                p[u] = flip_pode ? 1 : 0;
                p[v] = flip_pode ? 0 : 1;
            }
            PodeGraphResult result = pode_graph(a, p);
            json payload = to_json(result.graph);
            payload["to_space"] = json(result.to_space);
            std::ostringstream text;
            text << serialize(result.graph) << "# space vertices:";
            for (int v : result.to_space) text << " " << v;
            text << "\n";
            emit(ctx.as_json, payload, text.str());
        } else if (*tga) {
            TwoGraph t = two_graph_of_antipodal(load_antipodal(path));
            emit(ctx.as_json, to_json(t), serialize(t));
        } else if (*gtg) {
            Graph g = graph_of_two_graph(load_two_graph(path), base);
            emit(ctx.as_json, to_json(g), serialize(g));
        } else if (*lift_cmd) {
            AntipodalSpace a1 = load_antipodal(path), a2 = load_antipodal(path2);
            SwitchingPartialMap beta = load_map(map_path);
            LiftResult result = lift_two_graph_isomorphism(a1, a2, beta.map);
            if (ctx.as_json) {
                json payload = {{"ok", result.ok}};
                if (result.ok)
                    payload["alpha"] = map_to_json(result.alpha);
                else {
                    payload["reason"] = result.reason;
                    payload["conflict_cycle"] = json(result.conflict_cycle);
                }
                std::cout << payload.dump(2) << "\n";
            } else if (result.ok) {
                std::cout << serialize(SwitchingPartialMap{result.alpha, {}});
            } else {
                std::cout << result.reason << "\n";
            }
            if (!result.ok) return kExitVerifyFailure;
        } else if (*wbuild) {
            WitnessContext wctx = build_witness(load_antipodal(path));
            if (ctx.as_json) {
                json edges = json::array();
                for (const auto& [u, v] : wctx.edge_order()) edges.push_back({u, v});
                json psi = json::array();
                for (int v = 0; v < wctx.space().n; ++v)
                    psi.push_back({wctx.psi(v).edge, wctx.psi(v).chi});
                std::cout << json{{"m_order", edges},
                                  {"pode", wctx.pode()},
                                  {"psi", psi},
                                  {"pode_extension", "chi(e)"},
                                  {"witness_size", wctx.witness_size()}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "m-order " << wctx.num_edges() << "\n";
                for (const auto& [u, v] : wctx.edge_order()) std::cout << u << " " << v << "\n";
                std::cout << "pode";
                for (int b : wctx.pode()) std::cout << " " << b;
                std::cout << "\npsi " << wctx.space().n << "\n";
                for (int v = 0; v < wctx.space().n; ++v)
                    std::cout << wctx.psi(v).edge << " " << wctx.psi(v).chi << "\n";
                std::cout << "pode-extension chi(e)\n";
                std::cout << "witness-size " << wctx.witness_size() << "\n";
            }
        } else if (*wdist) {
            WitnessContext wctx = build_witness(load_antipodal(path));
            int d = wctx.distance({we1, wchi1}, {we2, wchi2});
            emit(ctx.as_json, json{{"distance", d}}, fmt::format("{}\n", d));
        } else if (*wextend) {
            WitnessContext wctx = build_witness(load_antipodal(path));
            SwitchingPartialMap m = load_map(map_path);
            WitnessAutomorphism theta = extend_automorphism(wctx, m.map);
            if (ctx.as_json) {
                json payload = {{"edge_perm", theta.edge_perm}, {"flips", flips_to_json(theta)}};
                if (materialize) {
                    json perm = json::array();
                    for (std::uint64_t i = 0; i < wctx.witness_size(); ++i) {
                        WitnessVertex w = theta.apply(wctx.vertex_at(i));
                        perm.push_back(wctx.index_of(w));
                    }
                    payload["vertex_perm"] = perm;
                }
                std::cout << payload.dump(2) << "\n";
            } else {
                std::cout << "edge-perm";
                for (int e : theta.edge_perm) std::cout << " " << e;
                std::cout << "\n" << flips_to_text(theta);
                if (materialize) {
                    if (wctx.num_edges() > materialize_limit())
                        throw SemanticError("witness too large to materialize");
                    for (std::uint64_t i = 0; i < wctx.witness_size(); ++i) {
                        WitnessVertex w = theta.apply(wctx.vertex_at(i));
                        std::cout << i << " " << wctx.index_of(w) << "\n";
                    }
                }
            }
        } else if (*wverify) {
            AntipodalSpace a = load_antipodal(path);
            oracle::VerifyReport witness_report = oracle::verify_witness_antipodal(a);
            oracle::VerifyReport eppa_report;
            if (exhaustive) {
                eppa_report = oracle::verify_eppa_antipodal(a);
            } else {
                WitnessContext wctx = build_witness(a);
                std::mt19937_64 rng(ctx.seed);
                for (int i = 0; i < samples; ++i) {
                    auto phi = sample_partial_iso(a, rng);
                    if (!phi) continue;
                    ++eppa_report.checked;
                    WitnessAutomorphism theta = extend_automorphism(wctx, *phi);
                    for (std::size_t k = 0; k < phi->dom.size(); ++k)
                        if (theta.apply(wctx.psi(phi->dom[k])) != wctx.psi(phi->img[k]))
                            eppa_report.failures.push_back("extension mismatch");
                    std::uniform_int_distribution<std::uint64_t> vdist(0,
                                                                      wctx.witness_size() - 1);
                    for (int t = 0; t < 64; ++t) {
                        WitnessVertex u = wctx.vertex_at(vdist(rng));
                        WitnessVertex v = wctx.vertex_at(vdist(rng));
                        if (u == v) continue;
                        if (wctx.distance(theta.apply(u), theta.apply(v)) != wctx.distance(u, v))
                            eppa_report.failures.push_back("distance not preserved");
                    }
                }
            }
            bool ok = witness_report.ok() && eppa_report.ok();
            json payload = {{"witness_ok", witness_report.ok()},
                            {"extensions_checked", eppa_report.checked},
                            {"failures", eppa_report.failures},
                            {"ok", ok}};
            emit(ctx.as_json, payload,
                 fmt::format("witness {}\nextensions checked {}\n{}\n",
                             witness_report.ok() ? "valid" : "INVALID", eppa_report.checked,
                             ok ? "ok" : "FAILED"));
            if (!ok) return kExitVerifyFailure;
        } else if (*eppa_graph || *eppa_tg) {
            std::ostringstream prov;
            for (int i = 0; i < argc; ++i) prov << (i ? " " : "") << argv[i];
            CertificateManifest manifest =
                *eppa_graph
                    ? make_manifest(switching_eppa_witness(load_graph(path), materialize_limit()),
                                    prov.str())
                    : make_manifest(two_graph_eppa_witness(load_two_graph(path),
                                                           materialize_limit()),
                                    prov.str());
            std::string text = serialize(manifest);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << text;
            }
            const Graph& h = *eppa_graph ? manifest.graph_cert->witness
                                         : manifest.two_graph_cert->inner.witness;
            if (ctx.as_json) {
                json payload = {{"kind", manifest.kind},
                                {"digest", manifest.digest},
                                {"witness_vertices", h.n}};
                if (out_path.empty())
                    payload["manifest"] = text;
                else
                    payload["out"] = out_path;
                std::cout << payload.dump(2) << "\n";
            } else if (out_path.empty()) {
                std::cout << text;
            } else {
                std::cout << "wrote " << out_path << " (witness on " << h.n << " vertices)\n";
            }
        } else if (*extend_cmd) {
            CertificateManifest manifest = parse_manifest(read_file(cert_path));
            SwitchingPartialMap m = load_map(map_path);
            for (int v : switch_args) m.switch_set.insert(v);
            if (manifest.kind == "graph") {
                const auto& cert = *manifest.graph_cert;
                if (m.switch_set.empty()) {
                    std::vector<int> map = extend_plain_iso(cert, m.map);
                    emit(ctx.as_json, json{{"map", map}}, serialize_total_map(map));
                } else {
                    SwitchingAutomorphism ext = extend_switching_iso(cert, m);
                    std::ostringstream text;
                    text << serialize_total_map(ext.map) << "switch";
                    for (int v : ext.switch_set) text << " " << v;
                    text << "\n";
                    emit(ctx.as_json,
                         json{{"map", ext.map}, {"switch_set", json(ext.switch_set)}},
                         text.str());
                }
            } else {
                std::vector<int> map = extend_two_graph_partial(*manifest.two_graph_cert, m.map);
                emit(ctx.as_json, json{{"map", map}}, serialize_total_map(map));
            }
        } else if (*apa) {
            ApaReport report = apa_counterexample_report();
            if (ctx.as_json) {
                json cands = json::array();
                for (const auto& c : report.candidates)
                    cands.push_back({{"amalgam", to_json(c.amalgam)},
                                     {"respects_automorphisms", c.respects_automorphisms},
                                     {"failure", c.failure}});
                std::cout << json{{"amalgam_exists", report.amalgam_exists},
                                  {"apa_holds", report.apa_holds},
                                  {"candidates", cands}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "A = two vertices; B1 adds x1 with no triple; B2 adds x2 with the "
                             "triple {u,v,x2}\n";
                std::cout << "parity-valid amalgams on {u,v,x1,x2}: " << report.candidates.size()
                          << "\n";
                for (const auto& c : report.candidates) {
                    std::cout << "- triples:";
                    for (const auto& tr : c.amalgam.triples)
                        std::cout << " {" << tr[0] << "," << tr[1] << "," << tr[2] << "}";
                    std::cout << (c.respects_automorphisms ? " [extends the automorphisms]"
                                                           : " [fails: " + c.failure + "]")
                              << "\n";
                }
                std::cout << "amalgam exists: " << (report.amalgam_exists ? "yes" : "no") << "\n";
                std::cout << "extension with automorphisms exists: "
                          << (report.apa_holds ? "yes" : "no") << "\n";
            }
            if (!report.amalgam_exists || report.apa_holds) return kExitVerifyFailure;
        } else if (*oenum) {
            if (kind == "graph") {
                auto all = oracle::enumerate_graphs(size);
                if (ctx.as_json) {
                    json payload = json::array();
                    for (const auto& g : all) payload.push_back(to_json(g));
                    std::cout << json{{"count", all.size()}, {"structures", payload}}.dump(2)
                              << "\n";
                } else {
                    for (const auto& g : all) std::cout << serialize(g) << "\n";
                    std::cout << "# count " << all.size() << "\n";
                }
            } else if (kind == "twograph") {
                auto all = oracle::enumerate_two_graphs(size);
                if (ctx.as_json) {
                    json payload = json::array();
                    for (const auto& t : all) payload.push_back(to_json(t));
                    std::cout << json{{"count", all.size()}, {"structures", payload}}.dump(2)
                              << "\n";
                } else {
                    for (const auto& t : all) std::cout << serialize(t) << "\n";
                    std::cout << "# count " << all.size() << "\n";
                }
            } else if (kind == "antipodal") {
                auto all = oracle::enumerate_antipodal_spaces(size);
                if (ctx.as_json) {
                    json payload = json::array();
                    for (const auto& a : all) payload.push_back(to_json(a));
                    std::cout << json{{"count", all.size()}, {"structures", payload}}.dump(2)
                              << "\n";
                } else {
                    for (const auto& a : all) std::cout << serialize(a) << "\n";
                    std::cout << "# count " << all.size() << "\n";
                }
            } else {
                throw SemanticError("unknown kind '" + kind + "'");
            }
        } else if (*overify) {
            oracle::VerifyReport total;
            if (kind == "graph") {
                for (const auto& g : oracle::enumerate_graphs(size)) {
                    auto r = oracle::verify_eppa_graph(g);
                    total.checked += r.checked;
                    total.failures.insert(total.failures.end(), r.failures.begin(),
                                          r.failures.end());
                }
            } else if (kind == "twograph") {
                for (const auto& t : oracle::enumerate_two_graphs(size)) {
                    auto r = oracle::verify_eppa_two_graph(t);
                    total.checked += r.checked;
                    total.failures.insert(total.failures.end(), r.failures.begin(),
                                          r.failures.end());
                }
            } else if (kind == "antipodal") {
                for (const auto& a : oracle::enumerate_antipodal_spaces(size)) {
                    auto r = oracle::verify_eppa_antipodal(a);
                    total.checked += r.checked;
                    total.failures.insert(total.failures.end(), r.failures.begin(),
                                          r.failures.end());
                }
            } else {
                throw SemanticError("unknown kind '" + kind + "'");
            }
            emit(ctx.as_json,
                 json{{"checked", total.checked},
                      {"failures", total.failures},
                      {"ok", total.ok()}},
                 fmt::format("checked {} extensions\n{}\n", total.checked,
                             total.ok() ? "ok" : "FAILED"));
            if (!total.ok()) return kExitVerifyFailure;
        } else if (*ocoh) {
            if (pipeline == "antipodal") {
                oracle::VerifyReport total;
                for (const auto& a : oracle::enumerate_antipodal_spaces(size)) {
                    auto r = oracle::verify_coherence_antipodal(a);
                    total.checked += r.checked;
                    total.failures.insert(total.failures.end(), r.failures.begin(),
                                          r.failures.end());
                }
                emit(ctx.as_json,
                     json{{"coherent_triples", total.checked},
                          {"failures", total.failures},
                          {"ok", total.ok()}},
                     fmt::format("coherent triples {}\n{}\n", total.checked,
                                 total.ok() ? "ok" : "FAILED"));
                if (!total.ok()) return kExitVerifyFailure;
            } else if (pipeline == "two-graph") {
                long triples = 0, violations = 0;
                for (const auto& t : oracle::enumerate_two_graphs(size)) {
                    auto m = oracle::measure_two_graph_coherence(t);
                    triples += m.triples;
                    violations += m.violations;
                }
                // measured, never asserted: the pipeline is not claimed coherent
                emit(ctx.as_json,
                     json{{"coherent_triples", triples}, {"violations", violations}},
                     fmt::format("coherent triples {}\nviolations {}\n", triples, violations));
            } else {
                throw SemanticError("unknown pipeline '" + pipeline + "'");
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
