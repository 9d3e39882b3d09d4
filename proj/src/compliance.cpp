#include "svproto/compliance.hpp"

#include <algorithm>
#include <optional>

namespace svproto {

const char* compliance_level_name(ComplianceLevel level) {
    switch (level) {
        case ComplianceLevel::Full: return "full";
        case ComplianceLevel::Partial: return "partial";
        case ComplianceLevel::None: return "none";
    }
    return "none";
}

namespace {

// Entities mapped to a class by the relation, in id order.
std::vector<std::string> mapped_entities(const ComplianceRelation& relation,
                                         const std::string& class_id) {
    std::vector<std::string> out;
    for (const auto& pair : relation) {
        if (pair.class_id == class_id) out.push_back(pair.entity_id);
    }
    return out;
}

bool linkage_holds(const ComplianceRelation& relation, const ServiceNetwork& network,
                   const ServiceNetworkSchema& schema) {
    for (const LinkClass& lc : schema.link_classes()) {
        const auto sources = mapped_entities(relation, lc.source);
        const auto destinations = mapped_entities(relation, lc.destination);
        for (const auto& source : sources) {
            for (const auto& destination : destinations) {
                bool found = false;
                for (std::size_t link_index : network.links_from(source)) {
                    const Link& link = network.links()[link_index];
                    if (link.destination == destination &&
                        link_full_member(link, lc, network, schema)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

void check_relation_ids(const ComplianceRelation& relation, const ServiceNetwork& network,
                        const ServiceNetworkSchema& schema) {
    for (const auto& pair : relation) {
        network.entity(pair.entity_id);
        schema.entity_class(pair.class_id);
    }
}

// ---------------------------------------------------------------------------
// Shared machinery of the two witness engines.  Candidate pairs come sorted
// by (class id, entity id); any subset automatically satisfies the membership
// condition, and endpoint instancehood in the linkage condition is already
// implied, so subset feasibility reduces to descriptor-matching links.

struct CandidateSpace {
    std::vector<CompliancePair> candidates;  // sorted
    // has_matching_link[lc][source entity][destination entity]
    std::vector<std::set<std::pair<std::string, std::string>>> matching_links;
    std::size_t class_count = 0;
};

CandidateSpace build_candidate_space(const ServiceNetwork& network,
                                     const ServiceNetworkSchema& schema) {
    CandidateSpace space;
    space.class_count = schema.classes().size();
    for (const EntityClass& cls : schema.classes()) {
        for (const Entity& entity : network.entities()) {
            if (is_relational_member(entity.id, cls.id, network, schema)) {
                space.candidates.push_back({cls.id, entity.id});
            }
        }
    }
    std::sort(space.candidates.begin(), space.candidates.end());
    space.matching_links.resize(schema.link_classes().size());
    for (std::size_t i = 0; i < schema.link_classes().size(); ++i) {
        const LinkClass& lc = schema.link_classes()[i];
        for (const Link& link : network.links()) {
            if (instance_of(link.descriptor, lc.descriptor)) {
                space.matching_links[i].emplace(link.source, link.destination);
            }
        }
    }
    return space;
}

// Does adding `next` to the feasible subset `chosen` keep the linkage
// condition satisfied?  Only interactions involving `next` need checking.
bool addition_feasible(const CandidateSpace& space, const ServiceNetworkSchema& schema,
                       const std::vector<CompliancePair>& chosen,
                       const CompliancePair& next) {
    for (std::size_t i = 0; i < schema.link_classes().size(); ++i) {
        const LinkClass& lc = schema.link_classes()[i];
        const auto& links = space.matching_links[i];
        auto pairs_with = [&](const CompliancePair& a, const CompliancePair& b) {
            // a plays the source role, b the destination role.
            return lc.source == a.class_id && lc.destination == b.class_id &&
                   !links.count({a.entity_id, b.entity_id});
        };
        if (pairs_with(next, next)) return false;
        for (const CompliancePair& prev : chosen) {
            if (pairs_with(next, prev) || pairs_with(prev, next)) return false;
        }
    }
    return true;
}

std::size_t coverage_of(const std::vector<CompliancePair>& pairs) {
    std::set<std::string> classes;
    for (const auto& pair : pairs) classes.insert(pair.class_id);
    return classes.size();
}

// Total order on complete solutions: larger coverage wins, ties go to the
// lexicographically least pair sequence (which is unique per subset).
bool better_solution(std::size_t coverage_a, const std::vector<CompliancePair>& a,
                     std::size_t coverage_b, const std::vector<CompliancePair>& b) {
    if (coverage_a != coverage_b) return coverage_a > coverage_b;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ComplianceReport make_report(const ServiceNetworkSchema& schema,
                             std::vector<CompliancePair> witness,
                             const CandidateSpace& space) {
    ComplianceReport report;
    for (const auto& pair : witness) {
        report.witness.insert(pair);
        report.covered_classes.insert(pair.class_id);
    }
    for (const EntityClass& cls : schema.classes()) {
        if (!report.covered_classes.count(cls.id)) report.uncovered_classes.insert(cls.id);
    }
    if (report.uncovered_classes.empty()) {
        report.level = ComplianceLevel::Full;
    } else if (!report.witness.empty()) {
        report.level = ComplianceLevel::Partial;
    } else {
        report.level = ComplianceLevel::None;
    }
    for (const std::string& class_id : report.uncovered_classes) {
        bool has_candidates = std::any_of(
            space.candidates.begin(), space.candidates.end(),
            [&](const CompliancePair& c) { return c.class_id == class_id; });
        if (has_candidates) {
            report.diagnostics.push_back(
                "class '" + class_id +
                "': relational members exist, but pairing any of them breaks the "
                "linkage condition against the chosen witness");
        } else {
            report.diagnostics.push_back("class '" + class_id +
                                         "': no entity is a relational member");
        }
    }
    return report;
}

struct Best {
    std::vector<CompliancePair> pairs;
    std::size_t coverage = 0;
    bool set = false;

    void offer(std::vector<CompliancePair> solution) {
        std::size_t coverage_new = coverage_of(solution);
        if (!set || better_solution(coverage_new, solution, coverage, pairs)) {
            pairs = std::move(solution);
            coverage = coverage_new;
            set = true;
        }
    }
};

class BacktrackingSearch {
public:
    BacktrackingSearch(const CandidateSpace& space, const ServiceNetworkSchema& schema)
        : space_(space), schema_(schema) {
        // remaining_classes_[i]: distinct classes among candidates i.. end.
        remaining_classes_.resize(space.candidates.size() + 1);
        std::set<std::string> seen;
        for (std::size_t i = space.candidates.size(); i-- > 0;) {
            seen.insert(space.candidates[i].class_id);
            remaining_classes_[i] = seen;
        }
    }

    std::vector<CompliancePair> run() {
        std::vector<CompliancePair> chosen;
        explore(0, chosen);
        return best_.pairs;
    }

private:
    void explore(std::size_t index, std::vector<CompliancePair>& chosen) {
        if (index == space_.candidates.size()) {
            best_.offer(chosen);
            return;
        }
        if (best_.set) {
            // Coverage attainable from here can never exceed current coverage
            // plus the classes still ahead; prune when strictly worse.
            std::set<std::string> covered;
            for (const auto& pair : chosen) covered.insert(pair.class_id);
            std::size_t extra = 0;
            for (const auto& cls : remaining_classes_[index]) {
                if (!covered.count(cls)) ++extra;
            }
            if (covered.size() + extra < best_.coverage) return;
        }
        const CompliancePair& candidate = space_.candidates[index];
        if (addition_feasible(space_, schema_, chosen, candidate)) {
            chosen.push_back(candidate);
            explore(index + 1, chosen);
            chosen.pop_back();
        }
        explore(index + 1, chosen);
    }

    const CandidateSpace& space_;
    const ServiceNetworkSchema& schema_;
    std::vector<std::set<std::string>> remaining_classes_;
    Best best_;
};

}  // namespace

bool is_partial_compliance_relation(const ComplianceRelation& relation,
                                    const ServiceNetwork& network,
                                    const ServiceNetworkSchema& schema) {
    check_relation_ids(relation, network, schema);
    for (const auto& pair : relation) {
        if (!is_relational_member(pair.entity_id, pair.class_id, network, schema)) {
            return false;
        }
    }
    return linkage_holds(relation, network, schema);
}

bool is_compliance_relation(const ComplianceRelation& relation,
                            const ServiceNetwork& network,
                            const ServiceNetworkSchema& schema) {
    if (!is_partial_compliance_relation(relation, network, schema)) return false;
    for (const EntityClass& cls : schema.classes()) {
        if (mapped_entities(relation, cls.id).empty()) return false;
    }
    return true;
}

ComplianceReport find_compliance(const ServiceNetwork& network,
                                 const ServiceNetworkSchema& schema) {
    CandidateSpace space = build_candidate_space(network, schema);
    BacktrackingSearch search(space, schema);
    return make_report(schema, search.run(), space);
}

ComplianceReport brute_force_compliance(const ServiceNetwork& network,
                                        const ServiceNetworkSchema& schema) {
    CandidateSpace space = build_candidate_space(network, schema);
    const std::size_t n = space.candidates.size();
    if (n > 20) {
        throw Error("InstanceTooLarge",
                    "exhaustive search over " + std::to_string(n) +
                        " candidate pairs exceeds the 20-pair limit");
    }
    Best best;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<CompliancePair> subset;
        bool feasible = true;
        for (std::size_t i = 0; i < n && feasible; ++i) {
            if (mask & (std::size_t{1} << i)) {
                feasible = addition_feasible(space, schema, subset, space.candidates[i]);
                subset.push_back(space.candidates[i]);
            }
        }
        if (feasible) best.offer(std::move(subset));
    }
    return make_report(schema, best.pairs, space);
}

std::vector<SubnetworkMatch> find_compliant_subnetworks(const ServiceNetwork& network,
                                                        const ServiceNetworkSchema& schema,
                                                        std::size_t limit) {
    std::vector<SubnetworkMatch> results;
    if (limit == 0) return results;
    std::vector<std::string> ids;
    for (const Entity& entity : network.entities()) ids.push_back(entity.id);

    // Full compliance is monotone under adding entities to the induced
    // subnetwork (links and candidate memberships only grow), so once a
    // subset is fully compliant no strict superset can be minimal, and a
    // branch whose largest possible subset is not compliant is dead.
    struct Enumerator {
        const ServiceNetwork& network;
        const ServiceNetworkSchema& schema;
        const std::vector<std::string>& ids;
        std::size_t limit;
        std::vector<SubnetworkMatch>& results;

        bool full(const std::set<std::string>& subset, ComplianceRelation* witness) const {
            ComplianceReport report =
                find_compliance(induced_subnetwork(network, subset), schema);
            if (witness) *witness = report.witness;
            return report.level == ComplianceLevel::Full;
        }

        bool minimal(const std::set<std::string>& subset) const {
            for (const std::string& id : subset) {
                std::set<std::string> smaller = subset;
                smaller.erase(id);
                if (full(smaller, nullptr)) return false;
            }
            return true;
        }

        // Visits subsets in lexicographic entity-id-set order.  Returns true
        // when the result limit has been reached.
        bool visit(std::set<std::string>& current, std::size_t next) {
            ComplianceRelation witness;
            if (full(current, &witness)) {
                if (minimal(current)) {
                    results.push_back({current, std::move(witness)});
                    if (results.size() >= limit) return true;
                }
                return false;  // supersets cannot be minimal
            }
            std::set<std::string> ceiling = current;
            ceiling.insert(ids.begin() + static_cast<std::ptrdiff_t>(next), ids.end());
            if (ceiling.size() > current.size() && !full(ceiling, nullptr)) return false;
            for (std::size_t i = next; i < ids.size(); ++i) {
                current.insert(ids[i]);
                if (visit(current, i + 1)) return true;
                current.erase(ids[i]);
            }
            return false;
        }
    };

    std::set<std::string> current;
    Enumerator{network, schema, ids, limit, results}.visit(current, 0);
    return results;
}

}  // namespace svproto
