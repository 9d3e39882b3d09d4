#pragma once

#include <string>
#include <vector>

#include "svproto/core_model.hpp"

namespace svproto {

// One violated condition of class relational membership:
//   1 — the entity is not an instance of the class,
//   2 — an outgoing link class has no matching outgoing link (descriptor),
//   3 — an incoming link class has no matching incoming link (descriptor).
// The detail names the class (condition 1) or the link class (conditions 2/3).
struct FailedCondition {
    int condition = 0;
    std::string detail;

    friend bool operator==(const FailedCondition& a, const FailedCondition& b) {
        return a.condition == b.condition && a.detail == b.detail;
    }
};

struct MembershipExplanation {
    bool member = false;
    std::vector<FailedCondition> failed_conditions;  // every failure, none skipped
};

// Class relational membership.  Conditions 2 and 3 check link descriptors
// only: the entity at the far end of a link is never inspected, so the
// verdict is local to the entity and its incident links.  Throws
// Error("UnknownEntity") / Error("UnknownClass").
MembershipExplanation relational_member(const std::string& entity_id,
                                        const std::string& class_id,
                                        const ServiceNetwork& network,
                                        const ServiceNetworkSchema& schema);

bool is_relational_member(const std::string& entity_id, const std::string& class_id,
                          const ServiceNetwork& network,
                          const ServiceNetworkSchema& schema);

// Link full membership: both endpoint entities are instances of the endpoint
// classes and the descriptor is an instance of the descriptor class.  The
// link must belong to the network (Error("UnknownLink")) and the link class
// to the schema (Error("UnknownLinkClass")).
bool link_full_member(const Link& link, const LinkClass& link_class,
                      const ServiceNetwork& network,
                      const ServiceNetworkSchema& schema);

}  // namespace svproto
