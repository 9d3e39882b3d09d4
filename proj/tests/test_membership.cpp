#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "svproto/membership.hpp"

using namespace svproto;
using testutil::fixture_network;
using testutil::fixture_schema;
using testutil::num;

namespace {

ServiceNetwork with_property(const ServiceNetwork& net, const std::string& entity_id,
                             const std::string& name, PropertyValue value) {
    std::vector<Entity> entities = net.entities();
    for (Entity& e : entities) {
        if (e.id == entity_id) e.properties.insert_or_assign(name, value);
    }
    return build_network(std::move(entities), net.links());
}

ServiceNetwork without_link(const ServiceNetwork& net, const std::string& source,
                            const std::string& destination) {
    std::vector<Link> links;
    for (const Link& l : net.links()) {
        if (l.source == source && l.destination == destination) continue;
        links.push_back(l);
    }
    return build_network(net.entities(), std::move(links));
}

}  // namespace

TEST_CASE("worked example: instancehood") {
    ServiceNetwork net = fixture_network("construction-network.json");
    ServiceNetworkSchema schema = fixture_schema("collaboration-schema.json");

    const PropertySet& archibald = net.entity("ArchibaldTex").properties;
    CHECK(instance_of(archibald, schema.entity_class("ExperiencedArchitect").constraints));
    CHECK_FALSE(instance_of(archibald, schema.entity_class("ExperiencedDeveloper").constraints));

    // The failed verdict has exactly two reasons: the profession constraint is
    // not satisfied and the #investments property is missing altogether.
    auto explanation =
        explain_instance_of(archibald, schema.entity_class("ExperiencedDeveloper").constraints);
    CHECK_FALSE(explanation.instance);
    REQUIRE(explanation.failures.size() == 2);
    CHECK(explanation.failures[0].constraint_name == "#investments");
    CHECK(explanation.failures[0].reason == InstanceFailure::Reason::MissingProperty);
    CHECK(explanation.failures[1].constraint_name == "profession");
    CHECK(explanation.failures[1].reason == InstanceFailure::Reason::NotSatisfied);

    CHECK(instance_of(net.entity("DevHouse").properties,
                      schema.entity_class("ExperiencedDeveloper").constraints));
    CHECK(instance_of(net.entity("MoniBank").properties,
                      schema.entity_class("Bank").constraints));
}

TEST_CASE("worked example: relational membership") {
    ServiceNetwork net = fixture_network("construction-network.json");
    ServiceNetworkSchema schema = fixture_schema("collaboration-schema.json");

    CHECK(is_relational_member("ArchibaldTex", "ExperiencedArchitect", net, schema));
    CHECK(is_relational_member("DevHouse", "ExperiencedDeveloper", net, schema));
    CHECK(is_relational_member("MoniBank", "Bank", net, schema));
    CHECK_FALSE(is_relational_member("ArchibaldTex", "ExperiencedDeveloper", net, schema));
    CHECK_FALSE(is_relational_member("DevHouse", "Bank", net, schema));

    CHECK_THROWS_AS(is_relational_member("ghost", "Bank", net, schema), Error);
    CHECK_THROWS_AS(is_relational_member("DevHouse", "Ghost", net, schema), Error);
}

TEST_CASE("membership explanations list every violated condition") {
    ServiceNetwork net = fixture_network("construction-network.json");
    ServiceNetworkSchema schema = fixture_schema("collaboration-schema.json");

    // Dropping DevHouse's bank link breaks the outgoing-link condition only.
    ServiceNetwork unbanked = without_link(net, "DevHouse", "MoniBank");
    auto m = relational_member("DevHouse", "ExperiencedDeveloper", unbanked, schema);
    CHECK_FALSE(m.member);
    REQUIRE(m.failed_conditions.size() == 1);
    CHECK(m.failed_conditions[0].condition == 2);
    CHECK(m.failed_conditions[0].detail == "ExperiencedDeveloper->Bank");

    // MoniBank then loses its only incoming link: the incoming condition fails.
    auto b = relational_member("MoniBank", "Bank", unbanked, schema);
    CHECK_FALSE(b.member);
    REQUIRE(b.failed_conditions.size() == 1);
    CHECK(b.failed_conditions[0].condition == 3);
    CHECK(b.failed_conditions[0].detail == "ExperiencedDeveloper->Bank");

    // A hopeless pairing reports all three conditions, none skipped.
    auto w = relational_member("MoniBank", "ExperiencedDeveloper", unbanked, schema);
    CHECK_FALSE(w.member);
    REQUIRE(w.failed_conditions.size() == 3);
    CHECK(w.failed_conditions[0].condition == 1);
    CHECK(w.failed_conditions[0].detail == "ExperiencedDeveloper");
    CHECK(w.failed_conditions[1].condition == 2);
    CHECK(w.failed_conditions[1].detail == "ExperiencedDeveloper->Bank");
    CHECK(w.failed_conditions[2].condition == 3);
    CHECK(w.failed_conditions[2].detail == "ExperiencedArchitect->ExperiencedDeveloper");

    // Degrading the link descriptor (not removing the link) also breaks it.
    ServiceNetwork lapsed = build_network(net.entities(), [&] {
        std::vector<Link> links = net.links();
        for (Link& l : links) {
            if (l.source == "DevHouse") l.descriptor.insert_or_assign("#currentLoans", num(4));
        }
        return links;
    }());
    CHECK_FALSE(is_relational_member("DevHouse", "ExperiencedDeveloper", lapsed, schema));
}

TEST_CASE("membership is local: the far endpoint is never inspected") {
    ServiceNetwork net = fixture_network("construction-network.json");
    ServiceNetworkSchema schema = fixture_schema("collaboration-schema.json");

    // Ruin MoniBank as a Bank instance; DevHouse's own membership only looks
    // at its incident link descriptors, so it must not change.
    ServiceNetwork ruined = with_property(net, "MoniBank", "interestRate", num(100));
    CHECK_FALSE(instance_of(ruined.entity("MoniBank").properties,
                            schema.entity_class("Bank").constraints));
    CHECK(is_relational_member("DevHouse", "ExperiencedDeveloper", ruined, schema));
    CHECK(is_relational_member("ArchibaldTex", "ExperiencedArchitect", ruined, schema));
}

TEST_CASE("worked example: link full membership") {
    ServiceNetwork net = fixture_network("construction-network.json");
    ServiceNetworkSchema schema = fixture_schema("collaboration-schema.json");

    const Link* bank_link = nullptr;
    for (const Link& l : net.links()) {
        if (l.source == "DevHouse") bank_link = &l;
    }
    REQUIRE(bank_link != nullptr);
    const LinkClass* bank_class = nullptr;
    for (const LinkClass& lc : schema.link_classes()) {
        if (lc.destination == "Bank") bank_class = &lc;
    }
    REQUIRE(bank_class != nullptr);

    CHECK(link_full_member(*bank_link, *bank_class, net, schema));

    // Full membership does inspect both endpoints: ruin the destination.
    ServiceNetwork ruined = with_property(net, "MoniBank", "interestRate", num(100));
    CHECK_FALSE(link_full_member(*bank_link, *bank_class, ruined, schema));

    // Unknown links and link classes are refused rather than judged.
    Link foreign{"MoniBank", "DevHouse", {}};
    CHECK_THROWS_AS(link_full_member(foreign, *bank_class, net, schema), Error);
    LinkClass foreign_class{"Bank", "Bank", {}};
    CHECK_THROWS_AS(link_full_member(*bank_link, foreign_class, net, schema), Error);
}
