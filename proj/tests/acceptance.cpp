// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Runs against the canonical fixtures plus seeded random instances.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "svproto/formats.hpp"
#include "svproto/membership.hpp"
#include "svproto/protocol.hpp"

using namespace svproto;
using namespace testgen;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(SVPROTO_FIXTURES_DIR) + "/" + name;
}

Document fixture(const std::string& name) { return load_document_file(fixture_path(name)); }

struct Checker {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }
};

// --- criterion 1: instancehood with a complete failure explanation ---------

void instancehood(Checker& c) {
    ServiceNetwork net = *fixture("construction-network.json").network;
    ServiceNetworkSchema schema = *fixture("collaboration-schema.json").schema;
    const PropertySet& at = net.entity("ArchibaldTex").properties;

    c.require(instance_of(at, schema.entity_class("ExperiencedArchitect").constraints),
              "ArchibaldTex should be an instance of ExperiencedArchitect");
    InstanceExplanation ex =
        explain_instance_of(at, schema.entity_class("ExperiencedDeveloper").constraints);
    c.require(!ex.instance, "ArchibaldTex should not be an instance of ExperiencedDeveloper");
    c.require(ex.failures.size() == 2,
              "expected exactly two failure reasons, got " + std::to_string(ex.failures.size()));
    if (ex.failures.size() == 2) {
        c.require(ex.failures[0] ==
                      InstanceFailure{"#investments", InstanceFailure::Reason::MissingProperty},
                  "first reason should be the missing #investments property");
        c.require(ex.failures[1] ==
                      InstanceFailure{"profession", InstanceFailure::Reason::NotSatisfied},
                  "second reason should be the unsatisfied profession constraint");
    }
}

// --- criterion 2: relational and link full membership -----------------------

void memberships(Checker& c) {
    ServiceNetwork net = *fixture("construction-network.json").network;
    ServiceNetworkSchema schema = *fixture("collaboration-schema.json").schema;

    c.require(is_relational_member("DevHouse", "ExperiencedDeveloper", net, schema),
              "DevHouse should be a relational member of ExperiencedDeveloper");
    c.require(is_relational_member("ArchibaldTex", "ExperiencedArchitect", net, schema),
              "ArchibaldTex should be a relational member of ExperiencedArchitect");
    c.require(is_relational_member("MoniBank", "Bank", net, schema),
              "MoniBank should be a relational member of Bank");

    const Link* developer_bank = nullptr;
    for (const Link& link : net.links()) {
        if (link.source == "DevHouse" && link.destination == "MoniBank") {
            developer_bank = &link;
        }
    }
    const LinkClass* developer_bank_class = nullptr;
    for (const LinkClass& lc : schema.link_classes()) {
        if (lc.source == "ExperiencedDeveloper" && lc.destination == "Bank") {
            developer_bank_class = &lc;
        }
    }
    c.require(developer_bank != nullptr && developer_bank_class != nullptr,
              "fixtures should contain the developer-to-bank link and link class");
    if (developer_bank && developer_bank_class) {
        c.require(link_full_member(*developer_bank, *developer_bank_class, net, schema),
                  "the DevHouse->MoniBank link should be a full member of its link class");
    }
}

// --- criterion 3: full and partial compliance with exact witnesses ----------

void compliance(Checker& c) {
    ServiceNetwork net = *fixture("construction-network.json").network;
    ServiceNetworkSchema base = *fixture("collaboration-schema.json").schema;
    ServiceNetworkSchema extended = *fixture("collaboration-extended-schema.json").schema;

    ComplianceRelation expected = {{"Bank", "MoniBank"},
                                   {"ExperiencedArchitect", "ArchibaldTex"},
                                   {"ExperiencedDeveloper", "DevHouse"}};

    ComplianceReport full = find_compliance(net, base);
    c.require(full.level == ComplianceLevel::Full, "base schema verdict should be full");
    c.require(full.witness == expected, "full witness should map all three entities");
    c.require(brute_force_compliance(net, base) == full,
              "exhaustive engine should confirm the full report");

    ComplianceReport partial = find_compliance(net, extended);
    c.require(partial.level == ComplianceLevel::Partial,
              "extended schema verdict should be partial");
    c.require(partial.uncovered_classes == std::set<std::string>{"SitePreparation"},
              "only SitePreparation should stay uncovered");
    c.require(partial.witness == expected, "partial witness should keep the three pairs");
    c.require(brute_force_compliance(net, extended) == partial,
              "exhaustive engine should confirm the partial report");
}

// --- criterion 4: implicit schema derivation ---------------------------------

void implicit_schema(Checker& c) {
    ProtocolBundle bundle = *fixture("abstract-protocol.json").protocol;
    ServiceNetworkSchema implicit = derive_implicit_schema(bundle);

    c.require(implicit.classes() == bundle.schema.classes(),
              "entity classes must be unchanged");

    auto provides = [](const std::string& s, const std::string& d) {
        return LinkClass{s, d, make_constraint_set({{"provides", parse_predicate("= true")}})};
    };
    auto provided_by = [](const std::string& s, const std::string& d) {
        return LinkClass{s, d,
                         make_constraint_set({{"isProvidedBy", parse_predicate("= true")}})};
    };
    std::vector<LinkClass> expected = bundle.schema.link_classes();
    for (auto [p, i] : {std::pair<std::string, std::string>{"v8", "v7"}, {"v3", "v2"},
                        {"v9", "v5"}}) {
        expected.push_back(provides(p, i));
        expected.push_back(provided_by(i, p));
    }
    std::sort(expected.begin(), expected.end());
    c.require(implicit.link_classes() == expected,
              "implied link classes must be exactly one provides/isProvidedBy pair per "
              "description image");

    ProtocolBundle again = bundle;
    again.schema = implicit;
    c.require(derive_implicit_schema(again) == implicit, "derivation must be idempotent");

    // The saved implicit-schema fixture is that same derivation.
    c.require(*fixture("implicit-schema.json").schema == implicit,
              "implicit-schema fixture should equal the derivation");
}

// --- criterion 5: protocol classification ladder -----------------------------

void classification(Checker& c) {
    c.require(classify(*fixture("abstract-protocol.json").protocol).level ==
                  ProtocolLevel::Abstract,
              "network-free bundle should classify abstract");
    c.require(classify(*fixture("prototype-protocol.json").protocol).level ==
                  ProtocolLevel::Prototype,
              "partially mapped bundle should classify prototype");

    ProtocolBundle executable = *fixture("executable-protocol.json").protocol;
    c.require(classify(executable).level == ProtocolLevel::Executable,
              "fully mapped bundle should classify executable");

    ProtocolBundle demoted = executable;
    demoted.omega.erase({"n10", {"d3", Role::Provider}});
    c.require(classify(demoted).level == ProtocolLevel::Prototype,
              "dropping one element assignment should demote to prototype");

    ProtocolBundle corrupted = executable;
    corrupted.phi = {{"v6", "n1"}};
    Classification invalid = classify(corrupted);
    c.require(invalid.level == ProtocolLevel::Invalid,
              "a non-member pair should make the bundle invalid");
    c.require(!invalid.reasons.empty() && invalid.reasons[0].code == "MembershipViolation",
              "the invalid verdict should carry a membership violation reason");
}

// --- criterion 6: oracle equivalence on random instances ---------------------

void oracle_equivalence(Checker& c) {
    int compared = 0;
    int disagreements = 0;
    for (unsigned seed = 1; compared < 500 && seed <= 5000; ++seed) {
        Rng rng(seed);
        ServiceNetwork net = random_network(rng, 6);
        ServiceNetworkSchema schema = random_schema(rng, 4, 4);
        if (candidate_count(net, schema) > 16) continue;
        if (!(find_compliance(net, schema) == brute_force_compliance(net, schema))) {
            ++disagreements;
        }
        ++compared;
    }
    c.require(compared >= 500, "expected 500 comparable witness instances, got " +
                                   std::to_string(compared));
    c.require(disagreements == 0,
              std::to_string(disagreements) + " witness-engine disagreements");

    int subnet_compared = 0;
    int subnet_disagreements = 0;
    for (unsigned seed = 1000; subnet_compared < 60 && seed <= 3000; ++seed) {
        Rng rng(seed);
        ServiceNetwork net = random_network(rng, 8);
        ServiceNetworkSchema schema = random_schema(rng, 3, 3);
        if (candidate_count(net, schema) > 12) continue;

        std::vector<std::string> ids;
        for (const Entity& e : net.entities()) ids.push_back(e.id);
        std::vector<std::set<std::string>> compliant;
        for (std::size_t mask = 0; mask < (std::size_t{1} << ids.size()); ++mask) {
            std::set<std::string> subset;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (mask & (std::size_t{1} << i)) subset.insert(ids[i]);
            }
            if (brute_force_compliance(induced_subnetwork(net, subset), schema).level ==
                ComplianceLevel::Full) {
                compliant.push_back(std::move(subset));
            }
        }
        std::vector<SubnetworkMatch> expected;
        for (const auto& subset : compliant) {
            bool minimal = true;
            for (const auto& other : compliant) {
                if (other != subset &&
                    std::includes(subset.begin(), subset.end(), other.begin(), other.end())) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                expected.push_back(
                    {subset,
                     brute_force_compliance(induced_subnetwork(net, subset), schema).witness});
            }
        }
        std::sort(expected.begin(), expected.end(),
                  [](const SubnetworkMatch& a, const SubnetworkMatch& b) {
                      return std::lexicographical_compare(a.entities.begin(), a.entities.end(),
                                                          b.entities.begin(), b.entities.end());
                  });
        if (!(find_compliant_subnetworks(net, schema, 1 << 16) == expected)) {
            ++subnet_disagreements;
        }
        ++subnet_compared;
    }
    c.require(subnet_compared >= 60, "expected 60 comparable subnetwork instances, got " +
                                         std::to_string(subnet_compared));
    c.require(subnet_disagreements == 0,
              std::to_string(subnet_disagreements) + " subnetwork-search disagreements");
}

// --- criterion 7: enactment ---------------------------------------------------

void enactment(Checker& c) {
    ProtocolBundle bundle = *fixture("executable-protocol.json").protocol;

    ProtocolInstance inst = instantiate(bundle);
    c.require(inst.current_state == "initial", "fresh instance should start at initial");

    using Enabled = std::vector<std::pair<std::string, std::string>>;
    c.require(enabled_activities(inst) == Enabled{{"a1", "d1"}},
              "only a1 should be enabled initially");

    try {
        step(inst, "a3", "n8");
        c.require(false, "a3 should not be enabled at initial");
    } catch (const Error& e) {
        c.require(e.code() == "ActivityNotEnabled",
                  "disabled activity should raise ActivityNotEnabled, got " + e.code());
    }
    try {
        step(inst, "a1", "n1");
        c.require(false, "n1 should not be authorized to perform a1");
    } catch (const Error& e) {
        c.require(e.code() == "PerformerNotAuthorized",
                  "wrong performer should raise PerformerNotAuthorized, got " + e.code());
    }

    inst = step(inst, "a1", "n4");
    c.require(inst.current_state == "financed", "a1 should lead to financed");
    c.require(enabled_activities(inst) == Enabled{{"a1", "d1"}, {"a2", "d2"}},
              "a1 and a2 should be enabled at financed");
    try {
        step(inst, "a1", "n4");
        c.require(false, "a1 at financed has no transition and must fail");
    } catch (const Error& e) {
        c.require(e.code() == "NoTransitionDefined",
                  "undefined transition should raise NoTransitionDefined, got " + e.code());
    }

    inst = step(inst, "a2", "n5");
    inst = step(inst, "a3", "n8");
    c.require(inst.current_state == "prepared", "the chain should end at prepared");
    c.require(enabled_activities(inst).empty(), "nothing should be enabled at prepared");
    c.require(inst.history == std::vector<HistoryEntry>{{"a1", "n4"}, {"a2", "n5"},
                                                        {"a3", "n8"}},
              "history should record the three performed steps");
    c.require(replay_state(inst) == inst.current_state,
              "replaying the history should reach the current state");

    try {
        instantiate(*fixture("prototype-protocol.json").protocol);
        c.require(false, "a prototype bundle must not instantiate");
    } catch (const Error& e) {
        c.require(e.code() == "NotExecutable",
                  "instantiating a prototype should raise NotExecutable, got " + e.code());
    }
}

// --- criterion 8: round-trips and malformed rejection ------------------------

void round_trips(Checker& c) {
    const char* predicates[] = {
        "= true",          "= \"two words\"", "!= 0.5",     "> 15",
        ">= -2.25",        "< 1000000",       "<= 5.5",     "superset {Architect}",
        "subset {a, b, c}", "contains x",     "in {x, y, 1, true}",
    };
    for (const char* text : predicates) {
        if (!(print_predicate(parse_predicate(text)) == text)) {
            c.require(false, std::string("predicate text not stable: ") + text);
        }
    }

    const char* canonical[] = {
        "construction-network.json",     "collaboration-schema.json",
        "collaboration-extended-schema.json", "abstract-protocol.json",
        "prototype-protocol.json",       "executable-protocol.json",
        "implicit-schema.json",          "compliance-report.json",
        "instance-initial.json",
    };
    for (const char* name : canonical) {
        std::string text = read_text_file(fixture_path(name));
        if (!(save_document(load_document(text)) == text)) {
            c.require(false, std::string("fixture not byte-stable: ") + name);
        }
    }

    int rejected = 0;
    for (int i = 1; i <= 10; ++i) {
        char name[16];
        std::snprintf(name, sizeof name, "m%02d.json", i);
        std::string text = read_text_file(fixture_path(std::string("malformed/") + name));
        try {
            load_document(text);
            c.require(false, std::string(name) + " should have been rejected");
        } catch (const SchemaViolation& e) {
            bool has_path = !e.path().empty() && e.path()[0] == '$' &&
                            std::string(e.what()).find(e.path()) != std::string::npos;
            c.require(has_path, std::string(name) + " error should carry its JSON path");
            ++rejected;
        }
    }
    c.require(rejected == 10, "all ten malformed documents should be rejected");
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        std::function<void(Checker&)> run;
    };
    const Criterion criteria[] = {
        {"entity instancehood with a complete two-reason explanation", instancehood},
        {"relational membership and link full membership", memberships},
        {"full and partial compliance with exact witnesses", compliance},
        {"implicit schema derivation, exact and idempotent", implicit_schema},
        {"protocol classification ladder with demotion and invalidation", classification},
        {"witness engines and subnetwork search agree with oracles", oracle_equivalence},
        {"enactment honours enabling, transitions, authorization and replay", enactment},
        {"canonical round-trips and malformed-document rejection", round_trips},
    };

    bool all_ok = true;
    int number = 1;
    for (const Criterion& criterion : criteria) {
        Checker checker;
        try {
            criterion.run(checker);
        } catch (const std::exception& e) {
            checker.ok = false;
            checker.notes.push_back(std::string("unexpected exception: ") + e.what());
        }
        std::cout << (checker.ok ? "[PASS] " : "[FAIL] ") << number << ". " << criterion.title
                  << "\n";
        for (const std::string& note : checker.notes) std::cout << "       - " << note << "\n";
        all_ok = all_ok && checker.ok;
        ++number;
    }
    return all_ok ? 0 : 1;
}
