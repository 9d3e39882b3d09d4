#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "svproto/compliance.hpp"

namespace svproto {

// State/activity machine steering enactment.  `executability` lists the
// (activity, state) pairs in which an activity may run; `transitions` gives
// the state reached when it does (it may be undefined for an executable
// pair, in which case stepping fails).
struct ProcessModel {
    std::set<std::string> states;
    std::set<std::string> activities;
    std::set<std::pair<std::string, std::string>> executability;             // (activity, state)
    std::map<std::pair<std::string, std::string>, std::string> transitions;  // (state, activity) -> state
    std::string initial_state;

    bool operator==(const ProcessModel&) const = default;
};

enum class Role { Consumer, Interface, Provider };

const char* role_name(Role role);  // "consumer" | "interface" | "provider"

// A service description names its three elements: the service consumer, the
// service interface, and the service provider.  The labels are display names
// (they may repeat); elements are identified by (description id, role).
struct ServiceDescription {
    std::string id;
    std::string consumer;
    std::string interface;
    std::string provider;

    bool operator==(const ServiceDescription&) const = default;
};

// Process model plus the service descriptions realizing its activities.
// `rho` assigns each activity the description whose service performs it and
// is expected to be a bijection.
struct ServiceOrientedSummary {
    ProcessModel process_model;
    std::vector<ServiceDescription> descriptions;  // sorted by id
    std::map<std::string, std::string> rho;        // activity -> description

    bool operator==(const ServiceOrientedSummary&) const = default;
};

struct Violation {
    std::string code;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

// Structural sanity of a summary: rho must be a bijection between activities
// and descriptions, and the process model internally consistent.  Returns
// all violations (codes: NonInjectiveRho, NonSurjectiveRho, RhoNotTotal,
// RhoUnknownActivity, RhoUnknownDescription, UnknownInitialState,
// ChiUnknownActivity, ChiUnknownState, TauUnknownState, TauUnknownActivity,
// TransitionNotExecutable, DuplicateDescriptionId) instead of throwing.
std::vector<Violation> validate_summary(const ServiceOrientedSummary& summary);

// An element of some description: (description id, role).
using ElementRef = std::pair<std::string, Role>;

// A protocol bundle carries the summary, the schema, and the mapping lambda
// from description elements to schema classes; prototype and executable
// bundles additionally attach a network with the omega (entity-to-element)
// and phi (entity-to-class) relations.
struct ProtocolBundle {
    ServiceOrientedSummary summary;
    ServiceNetworkSchema schema;
    std::map<ElementRef, std::string> lambda;  // element -> class id
    std::optional<ServiceNetwork> network;
    std::set<std::pair<std::string, ElementRef>> omega;  // (entity, element)
    ComplianceRelation phi;

    bool operator==(const ProtocolBundle&) const = default;
};

// The schema extended with the link classes implied by the service
// descriptions: for every description, a `provides` link class from its
// provider class to its interface class (descriptor {provides = true}) and an
// `isProvidedBy` link class in the opposite direction (descriptor
// {isProvidedBy = true}).  Consumer-side links are deliberately not implied.
// Entity classes are unchanged; repeated additions collapse, so the
// derivation is idempotent.  Throws Error("InvalidAbstractProtocol") when the
// summary or lambda is broken.
ServiceNetworkSchema derive_implicit_schema(const ProtocolBundle& bundle);

// Phi extended by the pairs omega implies through lambda:
// phi+ = phi ∪ {(lambda(element), entity) : (entity, element) in omega}.
// Throws Error("UnknownId") when omega or phi reference unknown entities,
// descriptions or classes, or lambda misses a referenced element.
ComplianceRelation induced_relation(const ProtocolBundle& bundle);

enum class ProtocolLevel { Abstract, Prototype, Executable, Invalid };

const char* protocol_level_name(ProtocolLevel level);  // "abstract" | ...

struct ClassificationReason {
    std::string code;
    std::string detail;

    bool operator==(const ClassificationReason&) const = default;
};

struct Classification {
    ProtocolLevel level = ProtocolLevel::Invalid;
    std::vector<ClassificationReason> reasons;  // non-empty only for Invalid

    bool operator==(const Classification&) const = default;
};

// Distinguishes the protocol levels:
//   Abstract   — no network attached, summary/lambda sound;
//   Prototype  — network attached and phi+ is a partial compliance relation
//                against the implicit schema;
//   Executable — prototype whose omega covers every description element and
//                whose phi+ also satisfies the coverage condition;
//   Invalid    — anything else; reasons carry machine-readable codes such as
//                MembershipViolation ((class, entity) pair fails relational
//                membership) and LinkageViolation.
Classification classify(const ProtocolBundle& bundle);

struct HistoryEntry {
    std::string activity;
    std::string performer;

    bool operator==(const HistoryEntry&) const = default;
};

// A running enactment of an executable protocol.
struct ProtocolInstance {
    ProtocolBundle protocol;
    std::string current_state;
    std::vector<HistoryEntry> history;

    bool operator==(const ProtocolInstance&) const = default;
};

// Throws Error("NotExecutable") when the bundle does not classify as
// executable and Error("UnknownState") when `start` names no state.  Without
// `start` the process model's initial state is used.
ProtocolInstance instantiate(const ProtocolBundle& bundle,
                             const std::optional<std::string>& start = std::nullopt);

// The (activity, description) pairs executable in the current state, sorted.
std::vector<std::pair<std::string, std::string>> enabled_activities(
    const ProtocolInstance& instance);

// Runs one activity.  The activity must be executable in the current state
// (Error("ActivityNotEnabled")), the transition must be defined
// (Error("NoTransitionDefined")), and the performer must be omega-assigned to
// the consumer element of the activity's description
// (Error("PerformerNotAuthorized")).  Returns the successor instance; the
// input instance is left untouched.
ProtocolInstance step(const ProtocolInstance& instance, const std::string& activity,
                      const std::string& performer);

// State reached by replaying the instance history from the initial state;
// equals current_state for every instance produced by instantiate/step.
std::string replay_state(const ProtocolInstance& instance);

}  // namespace svproto
