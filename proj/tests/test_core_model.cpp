#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "svproto/core_model.hpp"

using namespace svproto;
using testutil::flag;
using testutil::num;
using testutil::pred;
using testutil::txt;

namespace {

Entity entity(std::string id) { return {std::move(id), {}}; }

Link link(std::string source, std::string destination, PropertySet descriptor = {}) {
    return {std::move(source), std::move(destination), std::move(descriptor)};
}

}  // namespace

TEST_CASE("networks canonicalize on construction") {
    ServiceNetwork a = build_network(
        {entity("b"), entity("a"), entity("c")},
        {link("c", "a"), link("a", "b"), link("a", "b"), link("a", "b", {{"k", num(1)}})});
    ServiceNetwork b = build_network(
        {entity("c"), entity("b"), entity("a")},
        {link("a", "b", {{"k", num(1)}}), link("a", "b"), link("c", "a")});

    CHECK(a == b);  // order of definition never matters; exact duplicates collapse
    REQUIRE(a.entities().size() == 3);
    CHECK(a.entities()[0].id == "a");
    CHECK(a.entities()[2].id == "c");
    REQUIRE(a.links().size() == 3);
    CHECK(a.links()[0].source == "a");
    CHECK(a.links()[0].descriptor.empty());  // {} sorts before {k: 1}
    CHECK(a.links()[1].descriptor.size() == 1);
    CHECK(a.links()[2].source == "c");

    CHECK(a.has_entity("a"));
    CHECK_FALSE(a.has_entity("z"));
    CHECK(a.find_entity("z") == nullptr);
    CHECK(a.entity("b").id == "b");
    CHECK_THROWS_AS(a.entity("z"), Error);
    CHECK(a.has_link(link("c", "a")));
    CHECK_FALSE(a.has_link(link("a", "c")));

    CHECK(a.links_from("a").size() == 2);
    CHECK(a.links_to("a").size() == 1);
    CHECK(a.links_from("b").empty());
    CHECK(a.links_to("b").size() == 2);
}

TEST_CASE("network construction rejects broken input") {
    CHECK_THROWS_WITH_AS(build_network({entity("a"), entity("a")}, {}),
                         "duplicate entity id 'a'", Error);
    CHECK_THROWS_WITH_AS(build_network({entity("a")}, {link("a", "ghost")}),
                         "link endpoint 'ghost' is not an entity", Error);
    CHECK_THROWS_WITH_AS(build_network({entity("a")}, {link("ghost", "a")}),
                         "link endpoint 'ghost' is not an entity", Error);
}

TEST_CASE("schemata canonicalize on construction") {
    EntityClass ca{"A", make_constraint_set({{"x", pred("> 1")}})};
    EntityClass cb{"B", {}};
    LinkClass ab{"A", "B", make_constraint_set({{"k", pred("= true")}})};
    LinkClass ab2{"A", "B", make_constraint_set({{"k", pred("= false")}})};
    LinkClass self{"A", "A", {}};

    ServiceNetworkSchema s = build_schema({cb, ca}, {ab, self, ab2, ab});
    REQUIRE(s.classes().size() == 2);
    CHECK(s.classes()[0].id == "A");
    REQUIRE(s.link_classes().size() == 3);  // the duplicate of ab collapsed
    CHECK(s.link_classes()[0].destination == "A");

    CHECK(s.has_class("A"));
    CHECK_FALSE(s.has_class("C"));
    CHECK(s.entity_class("A").constraints.size() == 1);
    CHECK_THROWS_AS(s.entity_class("C"), Error);
    CHECK(s.has_link_class(self));
    CHECK_FALSE(s.has_link_class(LinkClass{"B", "A", {}}));

    CHECK(s.link_classes_from("A").size() == 3);
    CHECK(s.link_classes_to("B").size() == 2);
    CHECK(s.link_classes_to("A").size() == 1);

    // Parallel link classes get disambiguating labels in canonical order.
    CHECK(s.link_class_label(0) == "A->A");
    CHECK(s.link_class_label(1) == "A->B");
    CHECK(s.link_class_label(2) == "A->B#2");

    CHECK_THROWS_WITH_AS(build_schema({ca, ca}, {}), "duplicate class id 'A'", Error);
    CHECK_THROWS_AS(build_schema({ca}, {LinkClass{"A", "ghost", {}}}), Error);
}

TEST_CASE("induced subnetworks keep internal links only") {
    ServiceNetwork net = build_network(
        {entity("a"), entity("b"), entity("c")},
        {link("a", "b"), link("b", "c"), link("c", "a"), link("a", "a")});

    ServiceNetwork sub = induced_subnetwork(net, {"a", "b"});
    REQUIRE(sub.entities().size() == 2);
    REQUIRE(sub.links().size() == 2);  // a->b and the self-loop a->a
    CHECK(sub.has_link(link("a", "b")));
    CHECK(sub.has_link(link("a", "a")));
    CHECK_FALSE(sub.has_link(link("b", "c")));

    CHECK(induced_subnetwork(net, {}).entities().empty());
    CHECK(induced_subnetwork(net, {"a", "b", "c"}) == net);
    CHECK_THROWS_AS(induced_subnetwork(net, {"ghost"}), Error);
}
