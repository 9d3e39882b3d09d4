#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "svproto/predicates.hpp"
#include "svproto/values.hpp"

namespace svproto {

// Identified object with typed properties.
struct Entity {
    std::string id;
    PropertySet properties;

    friend bool operator==(const Entity& a, const Entity& b) {
        return a.id == b.id && a.properties == b.properties;
    }
};

// Directed arc with a descriptor that has full property semantics.  Links are
// triples: parallel links between the same endpoints are permitted as long as
// their descriptors differ; exact duplicates collapse.
struct Link {
    std::string source;
    std::string destination;
    PropertySet descriptor;

    friend bool operator==(const Link& a, const Link& b) {
        return a.source == b.source && a.destination == b.destination &&
               a.descriptor == b.descriptor;
    }
    friend bool operator<(const Link& a, const Link& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.destination != b.destination) return a.destination < b.destination;
        return a.descriptor < b.descriptor;
    }
};

// Immutable object-based graph: entities plus directed described links.
// Construction goes through build_network, which checks the invariants and
// fixes a canonical order (entities by id, links by source/destination/
// descriptor), so structurally equal networks compare and serialize equal.
class ServiceNetwork {
public:
    const std::vector<Entity>& entities() const { return entities_; }
    const std::vector<Link>& links() const { return links_; }

    const Entity* find_entity(const std::string& id) const;
    // Throws Error("UnknownEntity").
    const Entity& entity(const std::string& id) const;
    bool has_entity(const std::string& id) const { return find_entity(id) != nullptr; }
    bool has_link(const Link& link) const;

    // Indices into links() of the links leaving / entering the entity.
    const std::vector<std::size_t>& links_from(const std::string& id) const;
    const std::vector<std::size_t>& links_to(const std::string& id) const;

    friend bool operator==(const ServiceNetwork& a, const ServiceNetwork& b) {
        return a.entities_ == b.entities_ && a.links_ == b.links_;
    }

    friend ServiceNetwork build_network(std::vector<Entity> entities,
                                        std::vector<Link> links);

private:
    std::vector<Entity> entities_;
    std::vector<Link> links_;
    std::map<std::string, std::size_t> entity_index_;
    std::map<std::string, std::vector<std::size_t>> out_links_;
    std::map<std::string, std::vector<std::size_t>> in_links_;
};

// Throws Error("DuplicateEntityId") / Error("DanglingLinkEndpoint").
ServiceNetwork build_network(std::vector<Entity> entities, std::vector<Link> links);

// Identified class of property constraints.
struct EntityClass {
    std::string id;
    ConstraintSet constraints;

    friend bool operator==(const EntityClass& a, const EntityClass& b) {
        return a.id == b.id && a.constraints == b.constraints;
    }
};

// Directed class of links: endpoint entity classes plus a descriptor class.
// Link classes are triples like links; exact duplicates collapse.
struct LinkClass {
    std::string source;       // entity class id
    std::string destination;  // entity class id
    ConstraintSet descriptor;

    friend bool operator==(const LinkClass& a, const LinkClass& b) {
        return a.source == b.source && a.destination == b.destination &&
               a.descriptor == b.descriptor;
    }
    friend bool operator<(const LinkClass& a, const LinkClass& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.destination != b.destination) return a.destination < b.destination;
        return a.descriptor < b.descriptor;
    }
};

// Immutable class-based graph; the schema a network is checked against.
// Construction goes through build_schema (canonical order as for networks).
class ServiceNetworkSchema {
public:
    const std::vector<EntityClass>& classes() const { return classes_; }
    const std::vector<LinkClass>& link_classes() const { return link_classes_; }

    const EntityClass* find_class(const std::string& id) const;
    // Throws Error("UnknownClass").
    const EntityClass& entity_class(const std::string& id) const;
    bool has_class(const std::string& id) const { return find_class(id) != nullptr; }
    bool has_link_class(const LinkClass& link_class) const;

    // Indices into link_classes() with the given source / destination class.
    const std::vector<std::size_t>& link_classes_from(const std::string& class_id) const;
    const std::vector<std::size_t>& link_classes_to(const std::string& class_id) const;

    // Diagnostic label, e.g. "ExperiencedArchitect->ExperiencedDeveloper";
    // parallel link classes get a "#2", "#3", ... suffix in canonical order.
    std::string link_class_label(std::size_t index) const;

    friend bool operator==(const ServiceNetworkSchema& a, const ServiceNetworkSchema& b) {
        return a.classes_ == b.classes_ && a.link_classes_ == b.link_classes_;
    }

    friend ServiceNetworkSchema build_schema(std::vector<EntityClass> classes,
                                             std::vector<LinkClass> link_classes);

private:
    std::vector<EntityClass> classes_;
    std::vector<LinkClass> link_classes_;
    std::map<std::string, std::size_t> class_index_;
    std::map<std::string, std::vector<std::size_t>> out_link_classes_;
    std::map<std::string, std::vector<std::size_t>> in_link_classes_;
};

// Throws Error("DuplicateClassId") / Error("DanglingLinkClassEndpoint").
ServiceNetworkSchema build_schema(std::vector<EntityClass> classes,
                                  std::vector<LinkClass> link_classes);

// The subnetwork induced by an entity id subset: those entities plus every
// link whose endpoints both lie in the subset.  Unknown ids throw
// Error("UnknownEntity").
ServiceNetwork induced_subnetwork(const ServiceNetwork& network,
                                  const std::set<std::string>& entity_ids);

}  // namespace svproto
