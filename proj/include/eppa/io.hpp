#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "eppa/pipelines.hpp"
#include "eppa/structures.hpp"

namespace eppa {

struct ParseError : std::runtime_error {
    int line;
    int column;

    ParseError(int line_, int column_, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + reason),
          line(line_), column(column_) {}
};

// Text formats. '#' starts a comment line; whitespace is insignificant
// beyond separating tokens.
Graph parse_graph(const std::string& text);
TwoGraph parse_two_graph(const std::string& text);
AntipodalSpace parse_antipodal(const std::string& text);
SwitchingPartialMap parse_partial_map(const std::string& text);

using AnyStructure = std::variant<Graph, TwoGraph, AntipodalSpace>;

/// Dispatches on the header keyword (graph / twograph / antipodal).
AnyStructure parse_structure(const std::string& text);

std::string serialize(const Graph& g);
std::string serialize(const TwoGraph& t);
std::string serialize(const AntipodalSpace& a);
std::string serialize(const SwitchingPartialMap& m);

/// Versioned certificate manifest (header line "eppa-cert v1"). Parsing
/// rebuilds the certificate from the stored source and cross-checks every
/// stored table; serialization is canonical, so serialize-parse-serialize
/// is byte-identical.
struct CertificateManifest {
    std::string kind; // "graph" or "twograph"
    std::string provenance;
    std::string digest;
    std::optional<SwitchingEppaCertificate> graph_cert;
    std::optional<TwoGraphEppaCertificate> two_graph_cert;
};

CertificateManifest make_manifest(SwitchingEppaCertificate cert, std::string provenance);
CertificateManifest make_manifest(TwoGraphEppaCertificate cert, std::string provenance);

std::string serialize(const CertificateManifest& manifest);
CertificateManifest parse_manifest(const std::string& text);

/// FNV-1a, used for the input digest recorded in manifests.
std::string content_digest(const std::string& bytes);

} // namespace eppa
