#include "svproto/protocol.hpp"

#include <algorithm>

namespace svproto {

const char* role_name(Role role) {
    switch (role) {
        case Role::Consumer: return "consumer";
        case Role::Interface: return "interface";
        case Role::Provider: return "provider";
    }
    return "consumer";
}

const char* protocol_level_name(ProtocolLevel level) {
    switch (level) {
        case ProtocolLevel::Abstract: return "abstract";
        case ProtocolLevel::Prototype: return "prototype";
        case ProtocolLevel::Executable: return "executable";
        case ProtocolLevel::Invalid: return "invalid";
    }
    return "invalid";
}

namespace {

constexpr Role kRoles[] = {Role::Consumer, Role::Interface, Role::Provider};

std::string element_text(const ElementRef& element) {
    return "description '" + element.first + "' role '" + role_name(element.second) + "'";
}

}  // namespace

std::vector<Violation> validate_summary(const ServiceOrientedSummary& summary) {
    std::vector<Violation> out;
    const ProcessModel& pm = summary.process_model;

    if (!pm.states.count(pm.initial_state)) {
        out.push_back({"UnknownInitialState",
                       "initial state '" + pm.initial_state + "' is not a state"});
    }
    for (const auto& [activity, state] : pm.executability) {
        if (!pm.activities.count(activity)) {
            out.push_back({"ChiUnknownActivity",
                           "executability names unknown activity '" + activity + "'"});
        }
        if (!pm.states.count(state)) {
            out.push_back({"ChiUnknownState",
                           "executability names unknown state '" + state + "'"});
        }
    }
    for (const auto& [key, target] : pm.transitions) {
        const auto& [state, activity] = key;
        if (!pm.states.count(state)) {
            out.push_back({"TauUnknownState",
                           "transition leaves unknown state '" + state + "'"});
        }
        if (!pm.activities.count(activity)) {
            out.push_back({"TauUnknownActivity",
                           "transition names unknown activity '" + activity + "'"});
        }
        if (!pm.states.count(target)) {
            out.push_back({"TauUnknownState",
                           "transition reaches unknown state '" + target + "'"});
        }
        if (!pm.executability.count({activity, state})) {
            out.push_back({"TransitionNotExecutable",
                           "transition for activity '" + activity + "' in state '" + state +
                               "' has no matching executability pair"});
        }
    }

    std::set<std::string> description_ids;
    for (const ServiceDescription& d : summary.descriptions) {
        if (!description_ids.insert(d.id).second) {
            out.push_back({"DuplicateDescriptionId", "duplicate description id '" + d.id + "'"});
        }
    }

    std::map<std::string, std::string> description_to_activity;
    for (const auto& [activity, description] : summary.rho) {
        if (!pm.activities.count(activity)) {
            out.push_back({"RhoUnknownActivity",
                           "rho names unknown activity '" + activity + "'"});
        }
        if (!description_ids.count(description)) {
            out.push_back({"RhoUnknownDescription",
                           "rho names unknown description '" + description + "'"});
        }
        auto [it, inserted] = description_to_activity.emplace(description, activity);
        if (!inserted) {
            out.push_back({"NonInjectiveRho",
                           "activities '" + it->second + "' and '" + activity +
                               "' both map to description '" + description + "'"});
        }
    }
    for (const std::string& activity : pm.activities) {
        if (!summary.rho.count(activity)) {
            out.push_back({"RhoNotTotal", "activity '" + activity + "' has no description"});
        }
    }
    for (const std::string& id : description_ids) {
        if (!description_to_activity.count(id)) {
            out.push_back({"NonSurjectiveRho",
                           "description '" + id + "' is not assigned to any activity"});
        }
    }
    return out;
}

namespace {

// Violations of the abstract part beyond validate_summary: lambda must map
// every description element to an existing schema class and nothing else.
std::vector<Violation> validate_lambda(const ProtocolBundle& bundle) {
    std::vector<Violation> out;
    std::set<ElementRef> elements;
    for (const ServiceDescription& d : bundle.summary.descriptions) {
        for (Role role : kRoles) elements.insert({d.id, role});
    }
    for (const ElementRef& element : elements) {
        auto it = bundle.lambda.find(element);
        if (it == bundle.lambda.end()) {
            out.push_back({"LambdaNotTotal", element_text(element) + " has no class"});
        } else if (!bundle.schema.has_class(it->second)) {
            out.push_back({"LambdaUnknownClass",
                           element_text(element) + " maps to unknown class '" + it->second + "'"});
        }
    }
    for (const auto& [element, class_id] : bundle.lambda) {
        if (!elements.count(element)) {
            out.push_back({"LambdaUnknownDescription",
                           "lambda entry for unknown " + element_text(element)});
        }
    }
    return out;
}

std::vector<Violation> abstract_violations(const ProtocolBundle& bundle) {
    std::vector<Violation> out = validate_summary(bundle.summary);
    std::vector<Violation> lambda = validate_lambda(bundle);
    out.insert(out.end(), lambda.begin(), lambda.end());
    return out;
}

}  // namespace

ServiceNetworkSchema derive_implicit_schema(const ProtocolBundle& bundle) {
    if (!abstract_violations(bundle).empty()) {
        throw Error("InvalidAbstractProtocol",
                    "summary or lambda violations prevent schema derivation");
    }
    std::vector<EntityClass> classes = bundle.schema.classes();
    std::vector<LinkClass> link_classes = bundle.schema.link_classes();
    for (const ServiceDescription& d : bundle.summary.descriptions) {
        const std::string& interface_class = bundle.lambda.at({d.id, Role::Interface});
        const std::string& provider_class = bundle.lambda.at({d.id, Role::Provider});
        link_classes.push_back(
            {provider_class, interface_class,
             make_constraint_set({{"provides", Predicate::eq(PropertyValue::flag(true))}})});
        link_classes.push_back(
            {interface_class, provider_class,
             make_constraint_set(
                 {{"isProvidedBy", Predicate::eq(PropertyValue::flag(true))}})});
    }
    return build_schema(std::move(classes), std::move(link_classes));
}

ComplianceRelation induced_relation(const ProtocolBundle& bundle) {
    if (!bundle.network) {
        throw Error("UnknownId", "bundle has no network to induce a relation on");
    }
    std::set<std::string> description_ids;
    for (const ServiceDescription& d : bundle.summary.descriptions) description_ids.insert(d.id);

    ComplianceRelation out = bundle.phi;
    for (const auto& pair : bundle.phi) {
        if (!bundle.network->has_entity(pair.entity_id)) {
            throw Error("UnknownId", "phi names unknown entity '" + pair.entity_id + "'");
        }
        if (!bundle.schema.has_class(pair.class_id)) {
            throw Error("UnknownId", "phi names unknown class '" + pair.class_id + "'");
        }
    }
    for (const auto& [entity, element] : bundle.omega) {
        if (!bundle.network->has_entity(entity)) {
            throw Error("UnknownId", "omega names unknown entity '" + entity + "'");
        }
        if (!description_ids.count(element.first)) {
            throw Error("UnknownId", "omega names unknown description '" + element.first + "'");
        }
        auto it = bundle.lambda.find(element);
        if (it == bundle.lambda.end()) {
            throw Error("UnknownId", element_text(element) + " has no lambda class");
        }
        out.insert({it->second, entity});
    }
    return out;
}

Classification classify(const ProtocolBundle& bundle) {
    std::vector<ClassificationReason> reasons;
    for (const Violation& v : abstract_violations(bundle)) {
        reasons.push_back({v.code, v.detail});
    }
    if (!bundle.network) {
        if (!bundle.omega.empty()) {
            reasons.push_back({"OmegaWithoutNetwork", "omega given without a network"});
        }
        if (!bundle.phi.empty()) {
            reasons.push_back({"PhiWithoutNetwork", "phi given without a network"});
        }
        if (!reasons.empty()) return {ProtocolLevel::Invalid, std::move(reasons)};
        return {ProtocolLevel::Abstract, {}};
    }
    if (!reasons.empty()) return {ProtocolLevel::Invalid, std::move(reasons)};

    std::set<std::string> description_ids;
    for (const ServiceDescription& d : bundle.summary.descriptions) description_ids.insert(d.id);
    for (const auto& [entity, element] : bundle.omega) {
        if (!bundle.network->has_entity(entity)) {
            reasons.push_back({"OmegaUnknownEntity", "omega names unknown entity '" + entity + "'"});
        }
        if (!description_ids.count(element.first)) {
            reasons.push_back({"OmegaUnknownDescription",
                               "omega names unknown description '" + element.first + "'"});
        }
    }
    for (const auto& pair : bundle.phi) {
        if (!bundle.network->has_entity(pair.entity_id)) {
            reasons.push_back({"PhiUnknownEntity", "phi names unknown entity '" + pair.entity_id + "'"});
        }
        if (!bundle.schema.has_class(pair.class_id)) {
            reasons.push_back({"PhiUnknownClass", "phi names unknown class '" + pair.class_id + "'"});
        }
    }
    if (!reasons.empty()) return {ProtocolLevel::Invalid, std::move(reasons)};

    const ServiceNetworkSchema implicit = derive_implicit_schema(bundle);
    const ComplianceRelation phi_plus = induced_relation(bundle);
    const ServiceNetwork& network = *bundle.network;

    for (const auto& pair : phi_plus) {
        if (!is_relational_member(pair.entity_id, pair.class_id, network, implicit)) {
            reasons.push_back({"MembershipViolation",
                               "entity '" + pair.entity_id + "' is not a relational member of class '" +
                                   pair.class_id + "'"});
        }
    }
    for (std::size_t i = 0; i < implicit.link_classes().size(); ++i) {
        const LinkClass& lc = implicit.link_classes()[i];
        for (const auto& source_pair : phi_plus) {
            if (source_pair.class_id != lc.source) continue;
            for (const auto& dest_pair : phi_plus) {
                if (dest_pair.class_id != lc.destination) continue;
                bool found = false;
                for (std::size_t link_index : network.links_from(source_pair.entity_id)) {
                    const Link& link = network.links()[link_index];
                    if (link.destination == dest_pair.entity_id &&
                        link_full_member(link, lc, network, implicit)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    reasons.push_back({"LinkageViolation",
                                       "link class '" + implicit.link_class_label(i) +
                                           "': mapped pair ('" + source_pair.entity_id + "', '" +
                                           dest_pair.entity_id + "') has no full-member link"});
                }
            }
        }
    }
    if (!reasons.empty()) return {ProtocolLevel::Invalid, std::move(reasons)};

    bool omega_total = true;
    for (const ServiceDescription& d : bundle.summary.descriptions) {
        for (Role role : kRoles) {
            bool assigned = std::any_of(bundle.omega.begin(), bundle.omega.end(),
                                        [&](const auto& entry) {
                                            return entry.second == ElementRef{d.id, role};
                                        });
            if (!assigned) {
                omega_total = false;
                break;
            }
        }
        if (!omega_total) break;
    }
    std::set<std::string> covered;
    for (const auto& pair : phi_plus) covered.insert(pair.class_id);
    bool coverage = std::all_of(
        implicit.classes().begin(), implicit.classes().end(),
        [&](const EntityClass& cls) { return covered.count(cls.id) > 0; });

    if (omega_total && coverage) return {ProtocolLevel::Executable, {}};
    return {ProtocolLevel::Prototype, {}};
}

ProtocolInstance instantiate(const ProtocolBundle& bundle,
                             const std::optional<std::string>& start) {
    Classification cls = classify(bundle);
    if (cls.level != ProtocolLevel::Executable) {
        std::string detail = "protocol classifies as ";
        detail += protocol_level_name(cls.level);
        if (!cls.reasons.empty()) detail += ": " + cls.reasons.front().detail;
        throw Error("NotExecutable", detail);
    }
    std::string state = start.value_or(bundle.summary.process_model.initial_state);
    if (!bundle.summary.process_model.states.count(state)) {
        throw Error("UnknownState", "unknown state '" + state + "'");
    }
    return {bundle, std::move(state), {}};
}

std::vector<std::pair<std::string, std::string>> enabled_activities(
    const ProtocolInstance& instance) {
    std::vector<std::pair<std::string, std::string>> out;
    const ServiceOrientedSummary& summary = instance.protocol.summary;
    for (const auto& [activity, state] : summary.process_model.executability) {
        if (state != instance.current_state) continue;
        auto it = summary.rho.find(activity);
        if (it == summary.rho.end()) {
            throw Error("InvalidSummary", "activity '" + activity + "' has no description");
        }
        out.emplace_back(activity, it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ProtocolInstance step(const ProtocolInstance& instance, const std::string& activity,
                      const std::string& performer) {
    const ServiceOrientedSummary& summary = instance.protocol.summary;
    const ProcessModel& pm = summary.process_model;
    if (!pm.executability.count({activity, instance.current_state})) {
        throw Error("ActivityNotEnabled", "activity '" + activity +
                                              "' is not executable in state '" +
                                              instance.current_state + "'");
    }
    auto transition = pm.transitions.find({instance.current_state, activity});
    if (transition == pm.transitions.end()) {
        throw Error("NoTransitionDefined", "no transition for activity '" + activity +
                                               "' in state '" + instance.current_state + "'");
    }
    auto rho_it = summary.rho.find(activity);
    if (rho_it == summary.rho.end()) {
        throw Error("InvalidSummary", "activity '" + activity + "' has no description");
    }
    const ElementRef consumer{rho_it->second, Role::Consumer};
    if (!instance.protocol.omega.count({performer, consumer})) {
        throw Error("PerformerNotAuthorized",
                    "entity '" + performer + "' is not assigned to the consumer element of "
                        "description '" + rho_it->second + "'");
    }
    ProtocolInstance next = instance;
    next.current_state = transition->second;
    next.history.push_back({activity, performer});
    return next;
}

std::string replay_state(const ProtocolInstance& instance) {
    const ProcessModel& pm = instance.protocol.summary.process_model;
    std::string state = pm.initial_state;
    for (const HistoryEntry& entry : instance.history) {
        auto it = pm.transitions.find({state, entry.activity});
        if (it == pm.transitions.end()) {
            throw Error("NoTransitionDefined",
                        "history replay stuck: no transition for activity '" + entry.activity +
                            "' in state '" + state + "'");
        }
        state = it->second;
    }
    return state;
}

}  // namespace svproto
