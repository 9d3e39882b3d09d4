#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svproto/protocol.hpp"

namespace svproto {

enum class DocumentKind { Network, Schema, Protocol, Report };

const char* document_kind_name(DocumentKind kind);  // "network" | ...

// Body of a report-kind document.  `kind` discriminates which member is set:
// "compliance", "classification", "subnetworks" or "instance" (enactment
// state lives in report documents so runs are resumable and diffable).
struct ReportBody {
    std::string kind;
    std::optional<ComplianceReport> compliance;
    std::optional<Classification> classification;
    std::optional<std::vector<SubnetworkMatch>> subnetworks;
    std::optional<ProtocolInstance> instance;

    bool operator==(const ReportBody&) const = default;
};

// A document envelope: {"kind": ..., "formatVersion": "1", "body": ...} with
// exactly one of the typed bodies present, matching `kind`.
struct Document {
    DocumentKind kind = DocumentKind::Network;
    std::optional<ServiceNetwork> network;
    std::optional<ServiceNetworkSchema> schema;
    std::optional<ProtocolBundle> protocol;
    std::optional<ReportBody> report;

    bool operator==(const Document&) const = default;
};

Document make_network_document(ServiceNetwork network);
Document make_schema_document(ServiceNetworkSchema schema);
Document make_protocol_document(ProtocolBundle bundle);
Document make_compliance_document(ComplianceReport report);
Document make_classification_document(Classification classification);
Document make_subnetworks_document(std::vector<SubnetworkMatch> matches);
Document make_instance_document(ProtocolInstance instance);

// Parses and validates one document.  Throws ParseError (line/column) for
// text that is not JSON, UnsupportedVersion for format versions other than
// "1", and SchemaViolation (JSON path + message) for everything else: wrong
// shapes or types, duplicate ids/names/keys, dangling references, bad
// predicate text.  Loading never applies semantic judgements (memberships,
// rho bijectivity, executability); those belong to the operations.
Document load_document(const std::string& text);

// Canonical bytes: two-space indent, sorted object keys, arrays in
// documented deterministic order, trailing newline.  save(load(d)) == d for
// canonical documents; load(save(x)) == x for every in-memory value.
std::string save_document(const Document& document);

// File convenience; unreadable/unwritable paths throw Error("FileError").
Document load_document_file(const std::string& path);
void save_document_file(const Document& document, const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace svproto
