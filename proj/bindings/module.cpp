// Python bindings.  All document exchange uses canonical JSON text, so the
// Python surface stays a thin, stable veneer over the document formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "svproto/formats.hpp"
#include "svproto/membership.hpp"

namespace py = pybind11;
using namespace svproto;

namespace {

Document load_kind(const std::string& text, DocumentKind kind, const char* wanted) {
    Document doc = load_document(text);
    if (doc.kind != kind) {
        throw Error("WrongDocumentKind",
                    std::string("expected a ") + wanted + " document, got " +
                        document_kind_name(doc.kind));
    }
    return doc;
}

ServiceNetwork network_from(const std::string& text) {
    return *load_kind(text, DocumentKind::Network, "network").network;
}

ServiceNetworkSchema schema_from(const std::string& text) {
    return *load_kind(text, DocumentKind::Schema, "schema").schema;
}

ProtocolBundle protocol_from(const std::string& text) {
    return *load_kind(text, DocumentKind::Protocol, "protocol").protocol;
}

ProtocolInstance instance_from(const std::string& text) {
    Document doc = load_kind(text, DocumentKind::Report, "instance report");
    if (doc.report->kind != "instance") {
        throw Error("WrongDocumentKind",
                    "expected an instance report, got a " + doc.report->kind + " report");
    }
    return *doc.report->instance;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Service network schemata: membership, compliance, protocols, enactment.";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (e.code() + ": " + e.what()).c_str());
        }
    });

    m.def(
        "canonicalize", [](const std::string& text) { return save_document(load_document(text)); },
        py::arg("text"), "Validate a document and return its canonical JSON text.");

    m.def(
        "canonical_predicate",
        [](const std::string& text) { return print_predicate(parse_predicate(text)); },
        py::arg("text"), "Validate predicate text and return its canonical form.");

    m.def(
        "instance_of",
        [](const std::string& network, const std::string& schema, const std::string& entity_id,
           const std::string& class_id) {
            ServiceNetwork net = network_from(network);
            ServiceNetworkSchema sch = schema_from(schema);
            return instance_of(net.entity(entity_id).properties,
                               sch.entity_class(class_id).constraints);
        },
        py::arg("network"), py::arg("schema"), py::arg("entity_id"), py::arg("class_id"),
        "Does the entity satisfy every property constraint of the class?");

    m.def(
        "relational_member",
        [](const std::string& network, const std::string& schema, const std::string& entity_id,
           const std::string& class_id) {
            ServiceNetwork net = network_from(network);
            ServiceNetworkSchema sch = schema_from(schema);
            return is_relational_member(entity_id, class_id, net, sch);
        },
        py::arg("network"), py::arg("schema"), py::arg("entity_id"), py::arg("class_id"),
        "Instancehood plus matching incident links per incident link class.");

    m.def(
        "check_compliance",
        [](const std::string& network, const std::string& schema) {
            return save_document(make_compliance_document(
                find_compliance(network_from(network), schema_from(schema))));
        },
        py::arg("network"), py::arg("schema"),
        "Compliance report (level, witness, coverage) as a canonical report document.");

    m.def(
        "find_subnetworks",
        [](const std::string& network, const std::string& schema, std::size_t limit) {
            return save_document(make_subnetworks_document(
                find_compliant_subnetworks(network_from(network), schema_from(schema), limit)));
        },
        py::arg("network"), py::arg("schema"), py::arg("limit") = 1000,
        "Minimal fully compliant subnetworks as a canonical report document.");

    m.def(
        "implicit_schema",
        [](const std::string& protocol) {
            return save_document(
                make_schema_document(derive_implicit_schema(protocol_from(protocol))));
        },
        py::arg("protocol"),
        "Schema extended with the link classes implied by the service descriptions.");

    m.def(
        "classify",
        [](const std::string& protocol) {
            return save_document(make_classification_document(classify(protocol_from(protocol))));
        },
        py::arg("protocol"),
        "Protocol level (abstract/prototype/executable/invalid) as a report document.");

    m.def(
        "new_instance",
        [](const std::string& protocol, const std::optional<std::string>& start) {
            return save_document(
                make_instance_document(instantiate(protocol_from(protocol), start)));
        },
        py::arg("protocol"), py::arg("start") = std::nullopt,
        "Instantiate an executable protocol at its initial (or given) state.");

    m.def(
        "enabled_activities",
        [](const std::string& instance) { return enabled_activities(instance_from(instance)); },
        py::arg("instance"),
        "The (activity, description) pairs executable in the current state.");

    m.def(
        "step",
        [](const std::string& instance, const std::string& activity,
           const std::string& performer) {
            return save_document(
                make_instance_document(step(instance_from(instance), activity, performer)));
        },
        py::arg("instance"), py::arg("activity"), py::arg("performer"),
        "Run one activity and return the successor instance document.");
}
