#include "eppa/io.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <vector>

#include <fmt/core.h>

namespace eppa {

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1, column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++column;
            ++i;
            continue;
        }
        int start_col = column;
        std::string word;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '#') {
            word.push_back(text[i]);
            ++i;
            ++column;
        }
        tokens.push_back({std::move(word), line, start_col});
    }
    return tokens;
}

class Cursor {
  public:
    explicit Cursor(const std::string& text) : tokens_(tokenize(text)) {}

    bool done() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        if (done()) throw ParseError(last_line(), 1, "unexpected end of input");
        return tokens_[pos_];
    }

    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }

    void expect(const std::string& word) {
        Token t = next();
        if (t.text != word)
            throw ParseError(t.line, t.column,
                             fmt::format("expected '{}', got '{}'", word, t.text));
    }

    int next_int() {
        Token t = next();
        int value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw ParseError(t.line, t.column, fmt::format("expected integer, got '{}'", t.text));
        return value;
    }

    std::uint64_t next_u64() {
        Token t = next();
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw ParseError(t.line, t.column, fmt::format("expected integer, got '{}'", t.text));
        return value;
    }

    int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

Graph parse_graph_body(Cursor& cur) {
    int n = cur.next_int();
    std::set<Edge> edges;
    while (!cur.done() && cur.peek().text != "end") {
        int u = cur.next_int();
        int v = cur.next_int();
        edges.insert(make_edge(u, v));
    }
    return Graph{n, std::move(edges)};
}

TwoGraph parse_two_graph_body(Cursor& cur) {
    int n = cur.next_int();
    std::set<Triple> triples;
    while (!cur.done() && cur.peek().text != "end") {
        int a = cur.next_int();
        int b = cur.next_int();
        int c = cur.next_int();
        triples.insert(make_triple(a, b, c));
    }
    return TwoGraph{n, std::move(triples)};
}

AntipodalSpace parse_antipodal_body(Cursor& cur) {
    int n = cur.next_int();
    if (n < 0) throw ParseError(cur.last_line(), 1, "negative point count");
    AntipodalSpace a(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) a.set_dist(u, v, cur.next_int());
    return a;
}

} // namespace

Graph parse_graph(const std::string& text) {
    Cursor cur(text);
    cur.expect("graph");
    Graph g = parse_graph_body(cur);
    if (!cur.done()) {
        Token t = cur.next();
        throw ParseError(t.line, t.column, fmt::format("trailing token '{}'", t.text));
    }
    return g;
}

TwoGraph parse_two_graph(const std::string& text) {
    Cursor cur(text);
    cur.expect("twograph");
    TwoGraph t = parse_two_graph_body(cur);
    if (!cur.done()) {
        Token tok = cur.next();
        throw ParseError(tok.line, tok.column, fmt::format("trailing token '{}'", tok.text));
    }
    return t;
}

AntipodalSpace parse_antipodal(const std::string& text) {
    Cursor cur(text);
    cur.expect("antipodal");
    AntipodalSpace a = parse_antipodal_body(cur);
    if (!cur.done()) {
        Token tok = cur.next();
        throw ParseError(tok.line, tok.column, fmt::format("trailing token '{}'", tok.text));
    }
    return a;
}

SwitchingPartialMap parse_partial_map(const std::string& text) {
    Cursor cur(text);
    cur.expect("map");
    int k = cur.next_int();
    if (k < 0) throw ParseError(1, 1, "negative map size");
    SwitchingPartialMap m;
    for (int i = 0; i < k; ++i) {
        m.map.dom.push_back(cur.next_int());
        m.map.img.push_back(cur.next_int());
    }
    if (!cur.done()) {
        cur.expect("switch");
        while (!cur.done()) m.switch_set.insert(cur.next_int());
    }
    if (!m.map.well_formed())
        throw ParseError(1, 1, "map is not a bijection (duplicate vertices)");
    return m;
}

AnyStructure parse_structure(const std::string& text) {
    Cursor cur(text);
    Token head = cur.peek();
    if (head.text == "graph") return parse_graph(text);
    if (head.text == "twograph") return parse_two_graph(text);
    if (head.text == "antipodal") return parse_antipodal(text);
    throw ParseError(head.line, head.column,
                     fmt::format("unknown structure kind '{}'", head.text));
}

std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

std::string serialize(const TwoGraph& t) {
    std::ostringstream out;
    out << "twograph " << t.n << "\n";
    for (const auto& tr : t.triples) out << tr[0] << " " << tr[1] << " " << tr[2] << "\n";
    return out.str();
}

std::string serialize(const AntipodalSpace& a) {
    std::ostringstream out;
    out << "antipodal " << a.n << "\n";
    for (int u = 0; u < a.n; ++u) {
        bool any = false;
        for (int v = u + 1; v < a.n; ++v) {
            if (any) out << " ";
            out << a.dist(u, v);
            any = true;
        }
        if (any) out << "\n";
    }
    return out.str();
}

std::string serialize(const SwitchingPartialMap& m) {
    std::ostringstream out;
    out << "map " << m.map.dom.size() << "\n";
    for (std::size_t i = 0; i < m.map.dom.size(); ++i)
        out << m.map.dom[i] << " " << m.map.img[i] << "\n";
    if (!m.switch_set.empty()) {
        out << "switch";
        for (int v : m.switch_set) out << " " << v;
        out << "\n";
    }
    return out.str();
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return fmt::format("{:016x}", hash);
}

namespace {

void write_cert_tables(std::ostringstream& out, const SwitchingEppaCertificate& cert) {
    const auto& ctx = cert.ctx;
    out << "m-order " << ctx.num_edges() << "\n";
    for (const auto& [u, v] : ctx.edge_order()) out << u << " " << v << "\n";
    out << "pode";
    for (int b : ctx.pode()) out << " " << b;
    out << "\n";
    out << "psi " << ctx.space().n << "\n";
    for (int v = 0; v < ctx.space().n; ++v)
        out << ctx.psi(v).edge << " " << ctx.psi(v).chi << "\n";
    out << "h-vertices " << cert.h_vertices.size() << "\n";
    for (const auto& w : cert.h_vertices) out << w.edge << " " << w.chi << "\n";
    out << "embedding";
    for (int h : cert.embedding) out << " " << h;
    out << "\n";
}

void check_cert_tables(Cursor& cur, const SwitchingEppaCertificate& cert) {
    auto fail = [&](const std::string& what) {
        throw ParseError(cur.last_line(), 1,
                         "manifest disagrees with the rebuilt certificate: " + what);
    };
    cur.expect("m-order");
    int n = cur.next_int();
    if (n != cert.ctx.num_edges()) fail("matching edge count");
    for (int i = 0; i < n; ++i) {
        int u = cur.next_int(), v = cur.next_int();
        if (Edge{u, v} != cert.ctx.edge_order()[i]) fail("matching edge order");
    }
    cur.expect("pode");
    for (int v = 0; v < cert.ctx.space().n; ++v)
        if (cur.next_int() != cert.ctx.pode()[v]) fail("pode labelling");
    cur.expect("psi");
    if (cur.next_int() != cert.ctx.space().n) fail("embedding size");
    for (int v = 0; v < cert.ctx.space().n; ++v) {
        int e = cur.next_int();
        std::uint64_t chi = cur.next_u64();
        if (e != cert.ctx.psi(v).edge || chi != cert.ctx.psi(v).chi) fail("psi table");
    }
    cur.expect("h-vertices");
    int hn = cur.next_int();
    if (hn != static_cast<int>(cert.h_vertices.size())) fail("witness vertex count");
    for (int i = 0; i < hn; ++i) {
        int e = cur.next_int();
        std::uint64_t chi = cur.next_u64();
        if (e != cert.h_vertices[i].edge || chi != cert.h_vertices[i].chi)
            fail("witness vertex table");
    }
    cur.expect("embedding");
    for (std::size_t i = 0; i < cert.embedding.size(); ++i)
        if (cur.next_int() != cert.embedding[i]) fail("embedding table");
}

int manifest_max_edges() {
    if (const char* env = std::getenv("EPPA_MATERIALIZE_LIMIT")) return std::atoi(env);
    return 12;
}

} // namespace

CertificateManifest make_manifest(SwitchingEppaCertificate cert, std::string provenance) {
    CertificateManifest m;
    m.kind = "graph";
    m.provenance = std::move(provenance);
    m.digest = content_digest(serialize(cert.source));
    m.graph_cert = std::move(cert);
    return m;
}

CertificateManifest make_manifest(TwoGraphEppaCertificate cert, std::string provenance) {
    CertificateManifest m;
    m.kind = "twograph";
    m.provenance = std::move(provenance);
    m.digest = content_digest(serialize(cert.source));
    m.two_graph_cert = std::move(cert);
    return m;
}

std::string serialize(const CertificateManifest& manifest) {
    std::ostringstream out;
    out << "eppa-cert v1\n";
    out << "kind " << manifest.kind << "\n";
    out << "provenance " << manifest.provenance << "\n";
    out << "digest " << manifest.digest << "\n";
    out << "source\n";
    if (manifest.kind == "graph") {
        const auto& cert = *manifest.graph_cert;
        out << serialize(cert.source) << "end\n";
        write_cert_tables(out, cert);
    } else {
        const auto& cert = *manifest.two_graph_cert;
        out << serialize(cert.source) << "end\n";
        out << "base " << cert.base << "\n";
        out << "derived\n" << serialize(cert.derived) << "end\n";
        write_cert_tables(out, cert.inner);
    }
    out << "end-cert\n";
    return out.str();
}

CertificateManifest parse_manifest(const std::string& text) {
    // provenance is free text to end of line, so peel off the header lines
    // before tokenizing the rest
    std::istringstream in(text);
    std::string header, kind_line, prov_line, digest_line;
    std::getline(in, header);
    std::getline(in, kind_line);
    std::getline(in, prov_line);
    std::getline(in, digest_line);
    if (header != "eppa-cert v1") throw ParseError(1, 1, "missing 'eppa-cert v1' header");
    if (kind_line.rfind("kind ", 0) != 0) throw ParseError(2, 1, "missing 'kind' line");
    if (prov_line.rfind("provenance ", 0) != 0) throw ParseError(3, 1, "missing 'provenance' line");
    if (digest_line.rfind("digest ", 0) != 0) throw ParseError(4, 1, "missing 'digest' line");

    CertificateManifest m;
    m.kind = kind_line.substr(5);
    m.provenance = prov_line.substr(11);
    m.digest = digest_line.substr(7);
    std::string rest(std::istreambuf_iterator<char>(in), {});

    Cursor cur(rest);
    cur.expect("source");
    if (m.kind == "graph") {
        cur.expect("graph");
        Graph g = parse_graph_body(cur);
        cur.expect("end");
        auto cert = switching_eppa_witness(g, manifest_max_edges());
        check_cert_tables(cur, cert);
        cur.expect("end-cert");
        if (m.digest != content_digest(serialize(g)))
            throw ParseError(4, 1, "digest does not match the stored source");
        m.graph_cert = std::move(cert);
    } else if (m.kind == "twograph") {
        cur.expect("twograph");
        TwoGraph t = parse_two_graph_body(cur);
        cur.expect("end");
        cur.expect("base");
        int base = cur.next_int();
        cur.expect("derived");
        cur.expect("graph");
        Graph derived = parse_graph_body(cur);
        cur.expect("end");
        auto cert = two_graph_eppa_witness(t, manifest_max_edges());
        if (cert.base != base || cert.derived != derived)
            throw ParseError(cur.last_line(), 1,
                             "manifest disagrees with the rebuilt certificate: derived graph");
        check_cert_tables(cur, cert.inner);
        cur.expect("end-cert");
        if (m.digest != content_digest(serialize(t)))
            throw ParseError(4, 1, "digest does not match the stored source");
        m.two_graph_cert = std::move(cert);
    } else {
        throw ParseError(2, 1, fmt::format("unknown certificate kind '{}'", m.kind));
    }
    return m;
}

} // namespace eppa
