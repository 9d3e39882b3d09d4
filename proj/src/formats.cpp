#include "svproto/formats.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "jsonio.hpp"

namespace svproto {

using jsonio::JsonValue;

const char* document_kind_name(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::Network: return "network";
        case DocumentKind::Schema: return "schema";
        case DocumentKind::Protocol: return "protocol";
        case DocumentKind::Report: return "report";
    }
    return "network";
}

namespace {

// -----------------------------------------------------------------------
// Reading: a cursor pairs a JSON node with its path for error reporting.

class Cursor {
public:
    Cursor(const JsonValue& value, std::string path)
        : value_(&value), path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& message) const {
        throw SchemaViolation(path_, message + " (at " + path_ + ")");
    }

    const std::string& path() const { return path_; }
    const JsonValue& raw() const { return *value_; }

    bool is_object() const { return value_->kind == JsonValue::Kind::Object; }

    void require_object() const {
        if (!is_object()) fail("expected an object");
    }

    void require_array() const {
        if (value_->kind != JsonValue::Kind::Array) fail("expected an array");
    }

    // Rejects unknown members so typos surface as errors.
    void allow_only(std::initializer_list<const char*> keys) const {
        require_object();
        for (const auto& [key, child] : value_->object) {
            bool known = false;
            for (const char* allowed : keys) {
                if (key == allowed) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                throw SchemaViolation(path_ + "." + key, "unknown field '" + key + "'");
            }
        }
    }

    bool has(const std::string& name) const {
        return value_->find(name) != nullptr;
    }

    Cursor field(const std::string& name) const {
        require_object();
        const JsonValue* child = value_->find(name);
        if (!child) fail("missing field '" + name + "'");
        return Cursor(*child, path_ + "." + name);
    }

    std::size_t size() const {
        require_array();
        return value_->array.size();
    }

    Cursor at(std::size_t index) const {
        require_array();
        return Cursor(value_->array[index], path_ + "[" + std::to_string(index) + "]");
    }

    std::vector<std::pair<std::string, Cursor>> items() const {
        require_object();
        std::vector<std::pair<std::string, Cursor>> out;
        for (const auto& [key, child] : value_->object) {
            out.emplace_back(key, Cursor(child, path_ + "." + key));
        }
        return out;
    }

    const std::string& as_text() const {
        if (value_->kind != JsonValue::Kind::Text) fail("expected a string");
        return value_->text;
    }

    std::string as_id(const char* what) const {
        const std::string& id = as_text();
        if (id.empty()) fail(std::string("empty ") + what);
        return id;
    }

    Decimal as_number() const {
        if (value_->kind != JsonValue::Kind::Number) fail("expected a number");
        return value_->number;
    }

    bool as_flag() const {
        if (value_->kind != JsonValue::Kind::Flag) fail("expected true or false");
        return value_->flag;
    }

private:
    const JsonValue* value_;
    std::string path_;
};

PropertySet load_property_set(const Cursor& cursor);

PropertyValue load_property_value(const Cursor& cursor) {
    switch (cursor.raw().kind) {
        case JsonValue::Kind::Text:
            return PropertyValue::text(cursor.raw().text);
        case JsonValue::Kind::Number:
            return PropertyValue::number(cursor.raw().number);
        case JsonValue::Kind::Flag:
            return PropertyValue::flag(cursor.raw().flag);
        case JsonValue::Kind::Array: {
            StringSet members;
            for (std::size_t i = 0; i < cursor.size(); ++i) {
                Cursor member = cursor.at(i);
                if (!members.insert(member.as_text()).second) {
                    member.fail("duplicate set member '" + member.as_text() + "'");
                }
            }
            return PropertyValue::set(std::move(members));
        }
        case JsonValue::Kind::Object:
            return PropertyValue::nested(load_property_set(cursor));
        case JsonValue::Kind::Null:
            break;
    }
    cursor.fail("null is not a property value");
}

PropertySet load_property_set(const Cursor& cursor) {
    PropertySet out;
    for (const auto& [name, child] : cursor.items()) {
        out.emplace(name, load_property_value(child));
    }
    return out;
}

ServiceNetwork load_network_body(const Cursor& body) {
    body.allow_only({"entities", "links"});
    std::vector<Entity> entities;
    std::set<std::string> ids;
    Cursor entity_list = body.field("entities");
    for (std::size_t i = 0; i < entity_list.size(); ++i) {
        Cursor node = entity_list.at(i);
        node.allow_only({"id", "properties"});
        Cursor id_node = node.field("id");
        std::string id = id_node.as_id("entity id");
        if (!ids.insert(id).second) id_node.fail("duplicate entity id '" + id + "'");
        entities.push_back({std::move(id), load_property_set(node.field("properties"))});
    }
    std::vector<Link> links;
    Cursor link_list = body.field("links");
    for (std::size_t i = 0; i < link_list.size(); ++i) {
        Cursor node = link_list.at(i);
        node.allow_only({"source", "destination", "descriptor"});
        Link link;
        const std::pair<const char*, std::string Link::*> endpoints[] = {
            {"source", &Link::source}, {"destination", &Link::destination}};
        for (auto [field, target] : endpoints) {
            Cursor endpoint = node.field(field);
            link.*target = endpoint.as_id("entity id");
            if (!ids.count(link.*target)) {
                endpoint.fail("unknown entity '" + link.*target + "'");
            }
        }
        link.descriptor = load_property_set(node.field("descriptor"));
        links.push_back(std::move(link));
    }
    return build_network(std::move(entities), std::move(links));
}

ConstraintSet load_constraint_set(const Cursor& cursor) {
    ConstraintSet out;
    for (std::size_t i = 0; i < cursor.size(); ++i) {
        Cursor node = cursor.at(i);
        node.allow_only({"name", "predicate"});
        Cursor name_node = node.field("name");
        std::string name = name_node.as_id("constraint name");
        Cursor predicate_node = node.field("predicate");
        Predicate predicate = [&] {
            try {
                return parse_predicate(predicate_node.as_text());
            } catch (const SyntaxError& e) {
                predicate_node.fail(std::string("bad predicate: ") + e.what());
            }
        }();
        if (!out.emplace(std::move(name), std::move(predicate)).second) {
            name_node.fail("duplicate constraint name '" + node.field("name").as_text() + "'");
        }
    }
    return out;
}

ServiceNetworkSchema load_schema_body(const Cursor& body) {
    body.allow_only({"classes", "linkClasses"});
    std::vector<EntityClass> classes;
    std::set<std::string> ids;
    Cursor class_list = body.field("classes");
    for (std::size_t i = 0; i < class_list.size(); ++i) {
        Cursor node = class_list.at(i);
        node.allow_only({"id", "constraints"});
        Cursor id_node = node.field("id");
        std::string id = id_node.as_id("class id");
        if (!ids.insert(id).second) id_node.fail("duplicate class id '" + id + "'");
        classes.push_back({std::move(id), load_constraint_set(node.field("constraints"))});
    }
    std::vector<LinkClass> link_classes;
    Cursor link_list = body.field("linkClasses");
    for (std::size_t i = 0; i < link_list.size(); ++i) {
        Cursor node = link_list.at(i);
        node.allow_only({"source", "destination", "descriptor"});
        LinkClass lc;
        const std::pair<const char*, std::string LinkClass::*> endpoints[] = {
            {"source", &LinkClass::source}, {"destination", &LinkClass::destination}};
        for (auto [field, target] : endpoints) {
            Cursor endpoint = node.field(field);
            lc.*target = endpoint.as_id("class id");
            if (!ids.count(lc.*target)) endpoint.fail("unknown class '" + lc.*target + "'");
        }
        lc.descriptor = load_constraint_set(node.field("descriptor"));
        link_classes.push_back(std::move(lc));
    }
    return build_schema(std::move(classes), std::move(link_classes));
}

Role load_role(const Cursor& cursor) {
    const std::string& text = cursor.as_text();
    if (text == "consumer") return Role::Consumer;
    if (text == "interface") return Role::Interface;
    if (text == "provider") return Role::Provider;
    cursor.fail("unknown role '" + text + "'");
}

ProcessModel load_process_model(const Cursor& cursor) {
    cursor.allow_only({"states", "activities", "initialState", "executability", "transitions"});
    ProcessModel pm;
    const std::pair<const char*, std::set<std::string> ProcessModel::*> id_lists[] = {
        {"states", &ProcessModel::states}, {"activities", &ProcessModel::activities}};
    for (auto [field, target] : id_lists) {
        Cursor list = cursor.field(field);
        for (std::size_t i = 0; i < list.size(); ++i) {
            Cursor node = list.at(i);
            if (!(pm.*target).insert(node.as_id("id")).second) {
                node.fail("duplicate id '" + node.as_text() + "'");
            }
        }
    }
    Cursor initial = cursor.field("initialState");
    pm.initial_state = initial.as_id("state");
    if (!pm.states.count(pm.initial_state)) {
        initial.fail("unknown state '" + pm.initial_state + "'");
    }
    Cursor executability = cursor.field("executability");
    for (std::size_t i = 0; i < executability.size(); ++i) {
        Cursor node = executability.at(i);
        node.allow_only({"activity", "state"});
        Cursor activity = node.field("activity");
        if (!pm.activities.count(activity.as_text())) {
            activity.fail("unknown activity '" + activity.as_text() + "'");
        }
        Cursor state = node.field("state");
        if (!pm.states.count(state.as_text())) {
            state.fail("unknown state '" + state.as_text() + "'");
        }
        pm.executability.emplace(activity.as_text(), state.as_text());
    }
    Cursor transitions = cursor.field("transitions");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        Cursor node = transitions.at(i);
        node.allow_only({"from", "activity", "to"});
        for (const char* field : {"from", "to"}) {
            Cursor state = node.field(field);
            if (!pm.states.count(state.as_text())) {
                state.fail("unknown state '" + state.as_text() + "'");
            }
        }
        Cursor activity = node.field("activity");
        if (!pm.activities.count(activity.as_text())) {
            activity.fail("unknown activity '" + activity.as_text() + "'");
        }
        auto key = std::make_pair(node.field("from").as_text(), activity.as_text());
        if (!pm.transitions.emplace(key, node.field("to").as_text()).second) {
            node.fail("duplicate transition for activity '" + key.second + "' in state '" +
                      key.first + "'");
        }
    }
    return pm;
}

ServiceOrientedSummary load_summary(const Cursor& cursor) {
    cursor.allow_only({"processModel", "descriptions", "rho"});
    ServiceOrientedSummary summary;
    summary.process_model = load_process_model(cursor.field("processModel"));
    std::set<std::string> description_ids;
    Cursor descriptions = cursor.field("descriptions");
    for (std::size_t i = 0; i < descriptions.size(); ++i) {
        Cursor node = descriptions.at(i);
        node.allow_only({"id", "consumer", "interface", "provider"});
        ServiceDescription d;
        Cursor id_node = node.field("id");
        d.id = id_node.as_id("description id");
        if (!description_ids.insert(d.id).second) {
            id_node.fail("duplicate description id '" + d.id + "'");
        }
        d.consumer = node.field("consumer").as_id("element label");
        d.interface = node.field("interface").as_id("element label");
        d.provider = node.field("provider").as_id("element label");
        summary.descriptions.push_back(std::move(d));
    }
    std::sort(summary.descriptions.begin(), summary.descriptions.end(),
              [](const ServiceDescription& a, const ServiceDescription& b) {
                  return a.id < b.id;
              });
    Cursor rho = cursor.field("rho");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        Cursor node = rho.at(i);
        node.allow_only({"activity", "description"});
        Cursor activity = node.field("activity");
        if (!summary.process_model.activities.count(activity.as_text())) {
            activity.fail("unknown activity '" + activity.as_text() + "'");
        }
        Cursor description = node.field("description");
        if (!description_ids.count(description.as_text())) {
            description.fail("unknown description '" + description.as_text() + "'");
        }
        if (!summary.rho.emplace(activity.as_text(), description.as_text()).second) {
            activity.fail("duplicate rho entry for activity '" + activity.as_text() + "'");
        }
    }
    return summary;
}

ProtocolBundle load_protocol_body(const Cursor& body) {
    body.allow_only({"summary", "schema", "lambda", "network", "omega", "phi"});
    ProtocolBundle bundle;
    bundle.summary = load_summary(body.field("summary"));
    bundle.schema = load_schema_body(body.field("schema"));

    std::set<std::string> description_ids;
    for (const ServiceDescription& d : bundle.summary.descriptions) {
        description_ids.insert(d.id);
    }
    Cursor lambda = body.field("lambda");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        Cursor node = lambda.at(i);
        node.allow_only({"description", "role", "class"});
        Cursor description = node.field("description");
        if (!description_ids.count(description.as_text())) {
            description.fail("unknown description '" + description.as_text() + "'");
        }
        Role role = load_role(node.field("role"));
        Cursor class_node = node.field("class");
        if (!bundle.schema.has_class(class_node.as_text())) {
            class_node.fail("unknown class '" + class_node.as_text() + "'");
        }
        ElementRef element{description.as_text(), role};
        if (!bundle.lambda.emplace(element, class_node.as_text()).second) {
            node.fail("duplicate lambda entry for description '" + element.first +
                      "' role '" + role_name(role) + "'");
        }
    }

    if (body.has("network")) {
        bundle.network = load_network_body(body.field("network"));
    }
    if (body.has("omega")) {
        Cursor omega = body.field("omega");
        if (!bundle.network && omega.size() > 0) {
            omega.fail("omega requires a network");
        }
        for (std::size_t i = 0; i < omega.size(); ++i) {
            Cursor node = omega.at(i);
            node.allow_only({"entity", "description", "role"});
            Cursor entity = node.field("entity");
            if (!bundle.network->has_entity(entity.as_text())) {
                entity.fail("unknown entity '" + entity.as_text() + "'");
            }
            Cursor description = node.field("description");
            if (!description_ids.count(description.as_text())) {
                description.fail("unknown description '" + description.as_text() + "'");
            }
            Role role = load_role(node.field("role"));
            bundle.omega.emplace(entity.as_text(), ElementRef{description.as_text(), role});
        }
    }
    if (body.has("phi")) {
        Cursor phi = body.field("phi");
        if (!bundle.network && phi.size() > 0) phi.fail("phi requires a network");
        for (std::size_t i = 0; i < phi.size(); ++i) {
            Cursor node = phi.at(i);
            node.allow_only({"class", "entity"});
            Cursor class_node = node.field("class");
            if (!bundle.schema.has_class(class_node.as_text())) {
                class_node.fail("unknown class '" + class_node.as_text() + "'");
            }
            Cursor entity = node.field("entity");
            if (!bundle.network->has_entity(entity.as_text())) {
                entity.fail("unknown entity '" + entity.as_text() + "'");
            }
            bundle.phi.insert({class_node.as_text(), entity.as_text()});
        }
    }
    return bundle;
}

ComplianceLevel load_compliance_level(const Cursor& cursor) {
    const std::string& text = cursor.as_text();
    if (text == "full") return ComplianceLevel::Full;
    if (text == "partial") return ComplianceLevel::Partial;
    if (text == "none") return ComplianceLevel::None;
    cursor.fail("unknown compliance level '" + text + "'");
}

ProtocolLevel load_protocol_level(const Cursor& cursor) {
    const std::string& text = cursor.as_text();
    if (text == "abstract") return ProtocolLevel::Abstract;
    if (text == "prototype") return ProtocolLevel::Prototype;
    if (text == "executable") return ProtocolLevel::Executable;
    if (text == "invalid") return ProtocolLevel::Invalid;
    cursor.fail("unknown protocol level '" + text + "'");
}

ComplianceRelation load_relation(const Cursor& cursor) {
    ComplianceRelation out;
    for (std::size_t i = 0; i < cursor.size(); ++i) {
        Cursor node = cursor.at(i);
        node.allow_only({"class", "entity"});
        out.insert({node.field("class").as_id("class id"),
                    node.field("entity").as_id("entity id")});
    }
    return out;
}

std::set<std::string> load_string_set(const Cursor& cursor) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < cursor.size(); ++i) out.insert(cursor.at(i).as_text());
    return out;
}

ReportBody load_report_body(const Cursor& body) {
    ReportBody out;
    Cursor kind = body.field("report");
    out.kind = kind.as_text();
    if (out.kind == "compliance") {
        body.allow_only({"report", "level", "witness", "coveredClasses", "uncoveredClasses",
                         "diagnostics"});
        ComplianceReport report;
        report.level = load_compliance_level(body.field("level"));
        report.witness = load_relation(body.field("witness"));
        report.covered_classes = load_string_set(body.field("coveredClasses"));
        report.uncovered_classes = load_string_set(body.field("uncoveredClasses"));
        Cursor diagnostics = body.field("diagnostics");
        for (std::size_t i = 0; i < diagnostics.size(); ++i) {
            report.diagnostics.push_back(diagnostics.at(i).as_text());
        }
        out.compliance = std::move(report);
    } else if (out.kind == "classification") {
        body.allow_only({"report", "level", "reasons"});
        Classification classification;
        classification.level = load_protocol_level(body.field("level"));
        Cursor reasons = body.field("reasons");
        for (std::size_t i = 0; i < reasons.size(); ++i) {
            Cursor node = reasons.at(i);
            node.allow_only({"code", "detail"});
            classification.reasons.push_back(
                {node.field("code").as_text(), node.field("detail").as_text()});
        }
        out.classification = std::move(classification);
    } else if (out.kind == "subnetworks") {
        body.allow_only({"report", "results"});
        std::vector<SubnetworkMatch> matches;
        Cursor results = body.field("results");
        for (std::size_t i = 0; i < results.size(); ++i) {
            Cursor node = results.at(i);
            node.allow_only({"entities", "witness"});
            matches.push_back({load_string_set(node.field("entities")),
                               load_relation(node.field("witness"))});
        }
        out.subnetworks = std::move(matches);
    } else if (out.kind == "instance") {
        body.allow_only({"report", "currentState", "history", "protocol"});
        ProtocolInstance instance;
        instance.protocol = load_protocol_body(body.field("protocol"));
        if (!instance.protocol.network) {
            body.field("protocol").fail("instance protocol requires a network");
        }
        Cursor state = body.field("currentState");
        if (!instance.protocol.summary.process_model.states.count(state.as_text())) {
            state.fail("unknown state '" + state.as_text() + "'");
        }
        instance.current_state = state.as_text();
        Cursor history = body.field("history");
        for (std::size_t i = 0; i < history.size(); ++i) {
            Cursor node = history.at(i);
            node.allow_only({"activity", "performer"});
            Cursor activity = node.field("activity");
            if (!instance.protocol.summary.process_model.activities.count(activity.as_text())) {
                activity.fail("unknown activity '" + activity.as_text() + "'");
            }
            Cursor performer = node.field("performer");
            if (!instance.protocol.network->has_entity(performer.as_text())) {
                performer.fail("unknown entity '" + performer.as_text() + "'");
            }
            instance.history.push_back({activity.as_text(), performer.as_text()});
        }
        out.instance = std::move(instance);
    } else {
        kind.fail("unknown report kind '" + out.kind + "'");
    }
    return out;
}

// -----------------------------------------------------------------------
// Writing

JsonValue text_json(const std::string& s) { return JsonValue::make_text(s); }

JsonValue property_set_json(const PropertySet& properties);

JsonValue property_value_json(const PropertyValue& value) {
    switch (value.kind()) {
        case PropertyValue::Kind::Text:
            return text_json(value.as_text());
        case PropertyValue::Kind::Number:
            return JsonValue::make_number(value.as_number());
        case PropertyValue::Kind::Flag:
            return JsonValue::make_flag(value.as_flag());
        case PropertyValue::Kind::Set: {
            JsonValue out = JsonValue::make_array();
            for (const std::string& member : value.as_set()) {
                out.array.push_back(text_json(member));
            }
            return out;
        }
        case PropertyValue::Kind::Nested:
            return property_set_json(value.as_nested());
    }
    return JsonValue::null();
}

JsonValue property_set_json(const PropertySet& properties) {
    JsonValue out = JsonValue::make_object();
    for (const auto& [name, value] : properties) {
        out.object.emplace(name, property_value_json(value));
    }
    return out;
}

JsonValue network_json(const ServiceNetwork& network) {
    JsonValue out = JsonValue::make_object();
    JsonValue entities = JsonValue::make_array();
    for (const Entity& entity : network.entities()) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("id", text_json(entity.id));
        node.object.emplace("properties", property_set_json(entity.properties));
        entities.array.push_back(std::move(node));
    }
    JsonValue links = JsonValue::make_array();
    for (const Link& link : network.links()) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("source", text_json(link.source));
        node.object.emplace("destination", text_json(link.destination));
        node.object.emplace("descriptor", property_set_json(link.descriptor));
        links.array.push_back(std::move(node));
    }
    out.object.emplace("entities", std::move(entities));
    out.object.emplace("links", std::move(links));
    return out;
}

JsonValue constraint_set_json(const ConstraintSet& constraints) {
    JsonValue out = JsonValue::make_array();
    for (const auto& [name, predicate] : constraints) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("name", text_json(name));
        node.object.emplace("predicate", text_json(print_predicate(predicate)));
        out.array.push_back(std::move(node));
    }
    return out;
}

JsonValue schema_json(const ServiceNetworkSchema& schema) {
    JsonValue out = JsonValue::make_object();
    JsonValue classes = JsonValue::make_array();
    for (const EntityClass& cls : schema.classes()) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("id", text_json(cls.id));
        node.object.emplace("constraints", constraint_set_json(cls.constraints));
        classes.array.push_back(std::move(node));
    }
    JsonValue link_classes = JsonValue::make_array();
    for (const LinkClass& lc : schema.link_classes()) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("source", text_json(lc.source));
        node.object.emplace("destination", text_json(lc.destination));
        node.object.emplace("descriptor", constraint_set_json(lc.descriptor));
        link_classes.array.push_back(std::move(node));
    }
    out.object.emplace("classes", std::move(classes));
    out.object.emplace("linkClasses", std::move(link_classes));
    return out;
}

JsonValue summary_json(const ServiceOrientedSummary& summary) {
    const ProcessModel& pm = summary.process_model;
    JsonValue process_model = JsonValue::make_object();
    JsonValue states = JsonValue::make_array();
    for (const std::string& s : pm.states) states.array.push_back(text_json(s));
    JsonValue activities = JsonValue::make_array();
    for (const std::string& a : pm.activities) activities.array.push_back(text_json(a));
    JsonValue executability = JsonValue::make_array();
    for (const auto& [activity, state] : pm.executability) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("activity", text_json(activity));
        node.object.emplace("state", text_json(state));
        executability.array.push_back(std::move(node));
    }
    JsonValue transitions = JsonValue::make_array();
    for (const auto& [key, to] : pm.transitions) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("from", text_json(key.first));
        node.object.emplace("activity", text_json(key.second));
        node.object.emplace("to", text_json(to));
        transitions.array.push_back(std::move(node));
    }
    process_model.object.emplace("states", std::move(states));
    process_model.object.emplace("activities", std::move(activities));
    process_model.object.emplace("initialState", text_json(pm.initial_state));
    process_model.object.emplace("executability", std::move(executability));
    process_model.object.emplace("transitions", std::move(transitions));

    JsonValue descriptions = JsonValue::make_array();
    for (const ServiceDescription& d : summary.descriptions) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("id", text_json(d.id));
        node.object.emplace("consumer", text_json(d.consumer));
        node.object.emplace("interface", text_json(d.interface));
        node.object.emplace("provider", text_json(d.provider));
        descriptions.array.push_back(std::move(node));
    }
    JsonValue rho = JsonValue::make_array();
    for (const auto& [activity, description] : summary.rho) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("activity", text_json(activity));
        node.object.emplace("description", text_json(description));
        rho.array.push_back(std::move(node));
    }
    JsonValue out = JsonValue::make_object();
    out.object.emplace("processModel", std::move(process_model));
    out.object.emplace("descriptions", std::move(descriptions));
    out.object.emplace("rho", std::move(rho));
    return out;
}

JsonValue protocol_json(const ProtocolBundle& bundle) {
    JsonValue out = JsonValue::make_object();
    out.object.emplace("summary", summary_json(bundle.summary));
    out.object.emplace("schema", schema_json(bundle.schema));
    JsonValue lambda = JsonValue::make_array();
    for (const auto& [element, class_id] : bundle.lambda) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("description", text_json(element.first));
        node.object.emplace("role", text_json(role_name(element.second)));
        node.object.emplace("class", text_json(class_id));
        lambda.array.push_back(std::move(node));
    }
    out.object.emplace("lambda", std::move(lambda));
    if (bundle.network) {
        out.object.emplace("network", network_json(*bundle.network));
        JsonValue omega = JsonValue::make_array();
        for (const auto& [entity, element] : bundle.omega) {
            JsonValue node = JsonValue::make_object();
            node.object.emplace("entity", text_json(entity));
            node.object.emplace("description", text_json(element.first));
            node.object.emplace("role", text_json(role_name(element.second)));
            omega.array.push_back(std::move(node));
        }
        JsonValue phi = JsonValue::make_array();
        for (const auto& pair : bundle.phi) {
            JsonValue node = JsonValue::make_object();
            node.object.emplace("class", text_json(pair.class_id));
            node.object.emplace("entity", text_json(pair.entity_id));
            phi.array.push_back(std::move(node));
        }
        out.object.emplace("omega", std::move(omega));
        out.object.emplace("phi", std::move(phi));
    }
    return out;
}

JsonValue relation_json(const ComplianceRelation& relation) {
    JsonValue out = JsonValue::make_array();
    for (const CompliancePair& pair : relation) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("class", text_json(pair.class_id));
        node.object.emplace("entity", text_json(pair.entity_id));
        out.array.push_back(std::move(node));
    }
    return out;
}

JsonValue string_set_json(const std::set<std::string>& values) {
    JsonValue out = JsonValue::make_array();
    for (const std::string& value : values) out.array.push_back(text_json(value));
    return out;
}

JsonValue compliance_json(const ComplianceReport& report) {
    JsonValue out = JsonValue::make_object();
    out.object.emplace("report", text_json("compliance"));
    out.object.emplace("level", text_json(compliance_level_name(report.level)));
    out.object.emplace("witness", relation_json(report.witness));
    out.object.emplace("coveredClasses", string_set_json(report.covered_classes));
    out.object.emplace("uncoveredClasses", string_set_json(report.uncovered_classes));
    JsonValue diagnostics = JsonValue::make_array();
    for (const std::string& line : report.diagnostics) diagnostics.array.push_back(text_json(line));
    out.object.emplace("diagnostics", std::move(diagnostics));
    return out;
}

JsonValue classification_json(const Classification& classification) {
    JsonValue out = JsonValue::make_object();
    out.object.emplace("report", text_json("classification"));
    out.object.emplace("level", text_json(protocol_level_name(classification.level)));
    JsonValue reasons = JsonValue::make_array();
    for (const ClassificationReason& reason : classification.reasons) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("code", text_json(reason.code));
        node.object.emplace("detail", text_json(reason.detail));
        reasons.array.push_back(std::move(node));
    }
    out.object.emplace("reasons", std::move(reasons));
    return out;
}

JsonValue subnetworks_json(const std::vector<SubnetworkMatch>& matches) {
    JsonValue out = JsonValue::make_object();
    out.object.emplace("report", text_json("subnetworks"));
    JsonValue results = JsonValue::make_array();
    for (const SubnetworkMatch& match : matches) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("entities", string_set_json(match.entities));
        node.object.emplace("witness", relation_json(match.witness));
        results.array.push_back(std::move(node));
    }
    out.object.emplace("results", std::move(results));
    return out;
}

JsonValue instance_json(const ProtocolInstance& instance) {
    JsonValue out = JsonValue::make_object();
    out.object.emplace("report", text_json("instance"));
    out.object.emplace("currentState", text_json(instance.current_state));
    JsonValue history = JsonValue::make_array();
    for (const HistoryEntry& entry : instance.history) {
        JsonValue node = JsonValue::make_object();
        node.object.emplace("activity", text_json(entry.activity));
        node.object.emplace("performer", text_json(entry.performer));
        history.array.push_back(std::move(node));
    }
    out.object.emplace("history", std::move(history));
    out.object.emplace("protocol", protocol_json(instance.protocol));
    return out;
}

}  // namespace

Document make_network_document(ServiceNetwork network) {
    Document doc;
    doc.kind = DocumentKind::Network;
    doc.network = std::move(network);
    return doc;
}

Document make_schema_document(ServiceNetworkSchema schema) {
    Document doc;
    doc.kind = DocumentKind::Schema;
    doc.schema = std::move(schema);
    return doc;
}

Document make_protocol_document(ProtocolBundle bundle) {
    Document doc;
    doc.kind = DocumentKind::Protocol;
    doc.protocol = std::move(bundle);
    return doc;
}

namespace {

Document make_report_document(ReportBody body) {
    Document doc;
    doc.kind = DocumentKind::Report;
    doc.report = std::move(body);
    return doc;
}

}  // namespace

Document make_compliance_document(ComplianceReport report) {
    ReportBody body;
    body.kind = "compliance";
    body.compliance = std::move(report);
    return make_report_document(std::move(body));
}

Document make_classification_document(Classification classification) {
    ReportBody body;
    body.kind = "classification";
    body.classification = std::move(classification);
    return make_report_document(std::move(body));
}

Document make_subnetworks_document(std::vector<SubnetworkMatch> matches) {
    ReportBody body;
    body.kind = "subnetworks";
    body.subnetworks = std::move(matches);
    return make_report_document(std::move(body));
}

Document make_instance_document(ProtocolInstance instance) {
    ReportBody body;
    body.kind = "instance";
    body.instance = std::move(instance);
    return make_report_document(std::move(body));
}

Document load_document(const std::string& text) {
    JsonValue root = jsonio::parse_json(text);
    Cursor cursor(root, "$");
    cursor.allow_only({"kind", "formatVersion", "body"});
    Cursor kind = cursor.field("kind");
    const std::string& kind_text = kind.as_text();
    Document doc;
    if (kind_text == "network") {
        doc.kind = DocumentKind::Network;
    } else if (kind_text == "schema") {
        doc.kind = DocumentKind::Schema;
    } else if (kind_text == "protocol") {
        doc.kind = DocumentKind::Protocol;
    } else if (kind_text == "report") {
        doc.kind = DocumentKind::Report;
    } else {
        kind.fail("unknown document kind '" + kind_text + "'");
    }
    Cursor version = cursor.field("formatVersion");
    if (version.as_text() != "1") {
        throw UnsupportedVersion(version.path(),
                                 "unsupported format version '" + version.as_text() +
                                     "' (expected \"1\") (at " + version.path() + ")");
    }
    Cursor body = cursor.field("body");
    switch (doc.kind) {
        case DocumentKind::Network:
            doc.network = load_network_body(body);
            break;
        case DocumentKind::Schema:
            doc.schema = load_schema_body(body);
            break;
        case DocumentKind::Protocol:
            doc.protocol = load_protocol_body(body);
            break;
        case DocumentKind::Report:
            doc.report = load_report_body(body);
            break;
    }
    return doc;
}

std::string save_document(const Document& document) {
    JsonValue root = JsonValue::make_object();
    root.object.emplace("kind", text_json(document_kind_name(document.kind)));
    root.object.emplace("formatVersion", text_json("1"));
    JsonValue body;
    switch (document.kind) {
        case DocumentKind::Network:
            body = network_json(document.network.value());
            break;
        case DocumentKind::Schema:
            body = schema_json(document.schema.value());
            break;
        case DocumentKind::Protocol:
            body = protocol_json(document.protocol.value());
            break;
        case DocumentKind::Report: {
            const ReportBody& report = document.report.value();
            if (report.kind == "compliance") {
                body = compliance_json(report.compliance.value());
            } else if (report.kind == "classification") {
                body = classification_json(report.classification.value());
            } else if (report.kind == "subnetworks") {
                body = subnetworks_json(report.subnetworks.value());
            } else if (report.kind == "instance") {
                body = instance_json(report.instance.value());
            } else {
                throw Error("UnknownReportKind", "unknown report kind '" + report.kind + "'");
            }
            break;
        }
    }
    root.object.emplace("body", std::move(body));
    return jsonio::emit_json(root);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileError", "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("FileError", "cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("FileError", "cannot write '" + path + "'");
}

Document load_document_file(const std::string& path) {
    return load_document(read_text_file(path));
}

void save_document_file(const Document& document, const std::string& path) {
    write_text_file(path, save_document(document));
}

}  // namespace svproto
