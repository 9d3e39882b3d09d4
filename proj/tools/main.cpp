#include <cctype>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "svproto/formats.hpp"

namespace {

using namespace svproto;

std::string join(const std::set<std::string>& items) {
    std::string out;
    for (const std::string& item : items) {
        if (!out.empty()) out += ", ";
        out += item;
    }
    return out;
}

std::string upper(std::string text) {
    for (char& c : text) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return text;
}

Document load_kind(const std::string& path, DocumentKind kind) {
    Document doc = load_document_file(path);
    if (doc.kind != kind) {
        throw Error("WrongDocumentKind", "'" + path + "' is not a " +
                                             document_kind_name(kind) + " document");
    }
    return doc;
}

ServiceNetwork require_network(const std::string& path) {
    return std::move(load_kind(path, DocumentKind::Network).network.value());
}

ServiceNetworkSchema require_schema(const std::string& path) {
    return std::move(load_kind(path, DocumentKind::Schema).schema.value());
}

ProtocolBundle require_protocol(const std::string& path) {
    return std::move(load_kind(path, DocumentKind::Protocol).protocol.value());
}

ProtocolInstance require_instance(const std::string& path) {
    Document doc = load_kind(path, DocumentKind::Report);
    if (doc.report->kind != "instance") {
        throw Error("WrongDocumentKind", "'" + path + "' is not an instance state document");
    }
    return std::move(doc.report->instance.value());
}

void emit(const Document& doc, const std::optional<std::string>& out) {
    if (out) {
        save_document_file(doc, *out);
    } else {
        std::cout << save_document(doc);
    }
}

int run_validate(const std::string& path, bool json) {
    Document doc = load_document_file(path);
    if (json) {
        std::cout << save_document(doc);
    } else {
        std::cout << "OK: " << document_kind_name(doc.kind) << " document\n";
    }
    return 0;
}

int run_check(const std::string& network_path, const std::string& schema_path, bool partial,
              bool json) {
    ServiceNetwork network = require_network(network_path);
    ServiceNetworkSchema schema = require_schema(schema_path);
    ComplianceReport report = find_compliance(network, schema);
    if (json) {
        std::cout << save_document(make_compliance_document(report));
    } else {
        std::string line = upper(compliance_level_name(report.level));
        if (!report.uncovered_classes.empty()) {
            line += ", uncovered: " + join(report.uncovered_classes);
        }
        std::cout << line << "\n";
    }
    bool accepted = report.level == ComplianceLevel::Full ||
                    (partial && report.level == ComplianceLevel::Partial);
    return accepted ? 0 : 1;
}

int run_implicit(const std::string& protocol_path, const std::optional<std::string>& out) {
    ProtocolBundle bundle = require_protocol(protocol_path);
    emit(make_schema_document(derive_implicit_schema(bundle)), out);
    return 0;
}

int run_classify(const std::string& protocol_path, bool json) {
    ProtocolBundle bundle = require_protocol(protocol_path);
    Classification classification = classify(bundle);
    if (json) {
        std::cout << save_document(make_classification_document(classification));
    } else {
        std::string name = protocol_level_name(classification.level);
        name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        std::cout << name << "\n";
        for (const ClassificationReason& reason : classification.reasons) {
            std::cout << "  " << reason.code << ": " << reason.detail << "\n";
        }
    }
    return classification.level == ProtocolLevel::Executable ? 0 : 1;
}

int run_match(const std::string& network_path, const std::string& schema_path, std::size_t limit,
              bool json) {
    ServiceNetwork network = require_network(network_path);
    ServiceNetworkSchema schema = require_schema(schema_path);
    std::vector<SubnetworkMatch> matches = find_compliant_subnetworks(network, schema, limit);
    if (json) {
        std::cout << save_document(make_subnetworks_document(matches));
    } else {
        std::cout << matches.size()
                  << (matches.size() == 1 ? " compliant subnetwork\n"
                                          : " compliant subnetworks\n");
        std::size_t index = 1;
        for (const SubnetworkMatch& match : matches) {
            std::cout << "[" << index++ << "] "
                      << (match.entities.empty() ? "(empty)" : join(match.entities)) << "\n";
        }
    }
    return matches.empty() ? 1 : 0;
}

bool is_verdict_code(const std::string& code) {
    return code == "NotExecutable" || code == "ActivityNotEnabled" ||
           code == "NoTransitionDefined" || code == "PerformerNotAuthorized";
}

int run_instance_new(const std::string& protocol_path, const std::optional<std::string>& out) {
    ProtocolBundle bundle = require_protocol(protocol_path);
    emit(make_instance_document(instantiate(bundle)), out);
    return 0;
}

int run_instance_enabled(const std::string& state_path) {
    ProtocolInstance instance = require_instance(state_path);
    auto pairs = enabled_activities(instance);
    if (pairs.empty()) {
        std::cout << "(none)\n";
        return 1;
    }
    for (const auto& [activity, description] : pairs) {
        std::cout << activity << " (" << description << ")\n";
    }
    return 0;
}

int run_instance_step(const std::string& state_path, const std::string& activity,
                      const std::string& performer, const std::optional<std::string>& out) {
    ProtocolInstance instance = require_instance(state_path);
    emit(make_instance_document(step(instance, activity, performer)), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Service networks, schemata and protocols: validation, compliance "
                 "checking, classification and enactment"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "Load a document and check its invariants");
    std::string v_path;
    bool v_json = false;
    validate->add_option("file", v_path, "document to validate")->required();
    validate->add_flag("--json", v_json, "print the canonical document");

    auto* check = app.add_subcommand("check", "Check a network against a schema");
    std::string c_network, c_schema;
    bool c_partial = false, c_json = false;
    check->add_option("--network", c_network, "network document")->required();
    check->add_option("--schema", c_schema, "schema document")->required();
    check->add_flag("--partial", c_partial, "accept partial compliance");
    check->add_flag("--json", c_json, "print the compliance report as JSON");

    auto* implicit = app.add_subcommand("implicit", "Derive the implicit schema of a protocol");
    std::string i_protocol;
    std::optional<std::string> i_out;
    implicit->add_option("--protocol", i_protocol, "protocol document")->required();
    implicit->add_option("-o,--output", i_out, "write the schema document here");

    auto* classify_cmd = app.add_subcommand("classify", "Classify a protocol's level");
    std::string y_protocol;
    bool y_json = false;
    classify_cmd->add_option("--protocol", y_protocol, "protocol document")->required();
    classify_cmd->add_flag("--json", y_json, "print the classification report as JSON");

    auto* match = app.add_subcommand("match", "List minimal compliant subnetworks");
    std::string m_network, m_schema;
    std::size_t m_limit = 1000;
    bool m_json = false;
    match->add_option("--network", m_network, "network document")->required();
    match->add_option("--schema", m_schema, "schema document")->required();
    match->add_option("--limit", m_limit, "maximum number of results");
    match->add_flag("--json", m_json, "print the subnetworks report as JSON");

    auto* instance = app.add_subcommand("instance", "Enact an executable protocol");
    instance->require_subcommand(1);

    auto* inst_new = instance->add_subcommand("new", "Start an enactment");
    std::string n_protocol;
    std::optional<std::string> n_out;
    inst_new->add_option("--protocol", n_protocol, "protocol document")->required();
    inst_new->add_option("-o,--output", n_out, "write the instance state document here");

    auto* inst_enabled = instance->add_subcommand("enabled", "List executable activities");
    std::string e_state;
    inst_enabled->add_option("--state", e_state, "instance state document")->required();

    auto* inst_step = instance->add_subcommand("step", "Run one activity");
    std::string s_state, s_activity, s_performer;
    std::optional<std::string> s_out;
    inst_step->add_option("--state", s_state, "instance state document")->required();
    inst_step->add_option("--activity", s_activity, "activity to run")->required();
    inst_step->add_option("--performer", s_performer, "entity performing the activity")
        ->required();
    inst_step->add_option("-o,--output", s_out, "write the successor state document here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return run_validate(v_path, v_json);
        if (check->parsed()) return run_check(c_network, c_schema, c_partial, c_json);
        if (implicit->parsed()) return run_implicit(i_protocol, i_out);
        if (classify_cmd->parsed()) return run_classify(y_protocol, y_json);
        if (match->parsed()) return run_match(m_network, m_schema, m_limit, m_json);
        if (inst_new->parsed()) return run_instance_new(n_protocol, n_out);
        if (inst_enabled->parsed()) return run_instance_enabled(e_state);
        if (inst_step->parsed()) return run_instance_step(s_state, s_activity, s_performer, s_out);
    } catch (const Error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return is_verdict_code(e.code()) ? 1 : 2;
    }
    return 2;
}
