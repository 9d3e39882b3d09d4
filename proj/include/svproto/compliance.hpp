#pragma once

#include <set>
#include <string>
#include <vector>

#include "svproto/membership.hpp"

namespace svproto {

// One mapped (class, entity) pair of a compliance relation.  Ordered by
// class id, then entity id; relations and reports list pairs in this order.
struct CompliancePair {
    std::string class_id;
    std::string entity_id;

    friend bool operator==(const CompliancePair& a, const CompliancePair& b) {
        return a.class_id == b.class_id && a.entity_id == b.entity_id;
    }
    friend bool operator<(const CompliancePair& a, const CompliancePair& b) {
        if (a.class_id != b.class_id) return a.class_id < b.class_id;
        return a.entity_id < b.entity_id;
    }
};

using ComplianceRelation = std::set<CompliancePair>;

// A relation between network entities and schema classes is a compliance
// relation when three conditions hold:
//   membership — every paired entity is a relational member of its class;
//   linkage    — for every link class and every pair of mapped source/target
//                entities, some link between them is a full member of it;
//   coverage   — every schema class has at least one mapped entity.
// A partial compliance relation satisfies membership and linkage only.
// Unknown ids throw Error("UnknownEntity") / Error("UnknownClass").
bool is_compliance_relation(const ComplianceRelation& relation,
                            const ServiceNetwork& network,
                            const ServiceNetworkSchema& schema);

bool is_partial_compliance_relation(const ComplianceRelation& relation,
                                    const ServiceNetwork& network,
                                    const ServiceNetworkSchema& schema);

enum class ComplianceLevel {
    Full,     // witness covers every class
    Partial,  // witness covers some classes but not all
    None,     // only the empty relation satisfies membership and linkage
};

const char* compliance_level_name(ComplianceLevel level);  // "full" | ...

struct ComplianceReport {
    ComplianceLevel level = ComplianceLevel::None;
    ComplianceRelation witness;
    std::set<std::string> covered_classes;
    std::set<std::string> uncovered_classes;
    std::vector<std::string> diagnostics;  // one line per uncovered class

    bool operator==(const ComplianceReport&) const = default;
};

// Searches for the best witness among subsets of the candidate pairs
// {(class, entity) : entity is a relational member of the class}: maximum
// class coverage first, then the lexicographically least pair sequence.
// Backtracks over candidates in (class id, entity id) order, pruning subsets
// that already violate the linkage condition.  Deterministic: equal inputs
// give byte-equal reports.
ComplianceReport find_compliance(const ServiceNetwork& network,
                                 const ServiceNetworkSchema& schema);

// Same contract as find_compliance, computed by exhaustively enumerating all
// subsets of the candidate pairs.  Kept deliberately independent of the
// backtracking search so the two can cross-check each other.  Throws
// Error("InstanceTooLarge") when there are more than 20 candidate pairs.
ComplianceReport brute_force_compliance(const ServiceNetwork& network,
                                        const ServiceNetworkSchema& schema);

struct SubnetworkMatch {
    std::set<std::string> entities;
    ComplianceRelation witness;

    bool operator==(const SubnetworkMatch&) const = default;
};

// Entity subsets whose induced subnetwork is fully compliant with the schema
// and entity-wise minimal (removing any entity breaks full compliance).
// Memberships are evaluated against the induced subnetwork.  Results arrive
// in lexicographic entity-id-set order, truncated to `limit`.
std::vector<SubnetworkMatch> find_compliant_subnetworks(const ServiceNetwork& network,
                                                        const ServiceNetworkSchema& schema,
                                                        std::size_t limit);

}  // namespace svproto
