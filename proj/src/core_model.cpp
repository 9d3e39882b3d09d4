#include "svproto/core_model.hpp"

#include <algorithm>

namespace svproto {

namespace {

const std::vector<std::size_t> kNoIndices;

const std::vector<std::size_t>& find_or_empty(
    const std::map<std::string, std::vector<std::size_t>>& index, const std::string& key) {
    auto it = index.find(key);
    return it == index.end() ? kNoIndices : it->second;
}

}  // namespace

const Entity* ServiceNetwork::find_entity(const std::string& id) const {
    auto it = entity_index_.find(id);
    return it == entity_index_.end() ? nullptr : &entities_[it->second];
}

const Entity& ServiceNetwork::entity(const std::string& id) const {
    const Entity* e = find_entity(id);
    if (!e) throw Error("UnknownEntity", "unknown entity '" + id + "'");
    return *e;
}

bool ServiceNetwork::has_link(const Link& link) const {
    return std::binary_search(links_.begin(), links_.end(), link);
}

const std::vector<std::size_t>& ServiceNetwork::links_from(const std::string& id) const {
    return find_or_empty(out_links_, id);
}

const std::vector<std::size_t>& ServiceNetwork::links_to(const std::string& id) const {
    return find_or_empty(in_links_, id);
}

ServiceNetwork build_network(std::vector<Entity> entities, std::vector<Link> links) {
    ServiceNetwork net;
    std::sort(entities.begin(), entities.end(),
              [](const Entity& a, const Entity& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < entities.size(); ++i) {
        if (entities[i].id == entities[i + 1].id) {
            throw Error("DuplicateEntityId", "duplicate entity id '" + entities[i].id + "'");
        }
    }
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());

    net.entities_ = std::move(entities);
    for (std::size_t i = 0; i < net.entities_.size(); ++i) {
        net.entity_index_.emplace(net.entities_[i].id, i);
    }
    for (const Link& link : links) {
        for (const std::string* endpoint : {&link.source, &link.destination}) {
            if (!net.entity_index_.count(*endpoint)) {
                throw Error("DanglingLinkEndpoint",
                            "link endpoint '" + *endpoint + "' is not an entity");
            }
        }
    }
    net.links_ = std::move(links);
    for (std::size_t i = 0; i < net.links_.size(); ++i) {
        net.out_links_[net.links_[i].source].push_back(i);
        net.in_links_[net.links_[i].destination].push_back(i);
    }
    return net;
}

const EntityClass* ServiceNetworkSchema::find_class(const std::string& id) const {
    auto it = class_index_.find(id);
    return it == class_index_.end() ? nullptr : &classes_[it->second];
}

const EntityClass& ServiceNetworkSchema::entity_class(const std::string& id) const {
    const EntityClass* c = find_class(id);
    if (!c) throw Error("UnknownClass", "unknown class '" + id + "'");
    return *c;
}

bool ServiceNetworkSchema::has_link_class(const LinkClass& link_class) const {
    return std::binary_search(link_classes_.begin(), link_classes_.end(), link_class);
}

const std::vector<std::size_t>& ServiceNetworkSchema::link_classes_from(
    const std::string& class_id) const {
    return find_or_empty(out_link_classes_, class_id);
}

const std::vector<std::size_t>& ServiceNetworkSchema::link_classes_to(
    const std::string& class_id) const {
    return find_or_empty(in_link_classes_, class_id);
}

std::string ServiceNetworkSchema::link_class_label(std::size_t index) const {
    const LinkClass& lc = link_classes_.at(index);
    std::string label = lc.source + "->" + lc.destination;
    // Count siblings with the same endpoints; identical endpoints are adjacent
    // in the canonical order.
    std::size_t group_start = index;
    while (group_start > 0 && link_classes_[group_start - 1].source == lc.source &&
           link_classes_[group_start - 1].destination == lc.destination) {
        --group_start;
    }
    if (group_start < index) {
        label += "#" + std::to_string(index - group_start + 1);
    }
    return label;
}

ServiceNetworkSchema build_schema(std::vector<EntityClass> classes,
                                  std::vector<LinkClass> link_classes) {
    ServiceNetworkSchema schema;
    std::sort(classes.begin(), classes.end(),
              [](const EntityClass& a, const EntityClass& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < classes.size(); ++i) {
        if (classes[i].id == classes[i + 1].id) {
            throw Error("DuplicateClassId", "duplicate class id '" + classes[i].id + "'");
        }
    }
    std::sort(link_classes.begin(), link_classes.end());
    link_classes.erase(std::unique(link_classes.begin(), link_classes.end()),
                       link_classes.end());

    schema.classes_ = std::move(classes);
    for (std::size_t i = 0; i < schema.classes_.size(); ++i) {
        schema.class_index_.emplace(schema.classes_[i].id, i);
    }
    for (const LinkClass& lc : link_classes) {
        for (const std::string* endpoint : {&lc.source, &lc.destination}) {
            if (!schema.class_index_.count(*endpoint)) {
                throw Error("DanglingLinkClassEndpoint",
                            "link class endpoint '" + *endpoint + "' is not a class");
            }
        }
    }
    schema.link_classes_ = std::move(link_classes);
    for (std::size_t i = 0; i < schema.link_classes_.size(); ++i) {
        schema.out_link_classes_[schema.link_classes_[i].source].push_back(i);
        schema.in_link_classes_[schema.link_classes_[i].destination].push_back(i);
    }
    return schema;
}

ServiceNetwork induced_subnetwork(const ServiceNetwork& network,
                                  const std::set<std::string>& entity_ids) {
    std::vector<Entity> entities;
    for (const std::string& id : entity_ids) entities.push_back(network.entity(id));
    std::vector<Link> links;
    for (const Link& link : network.links()) {
        if (entity_ids.count(link.source) && entity_ids.count(link.destination)) {
            links.push_back(link);
        }
    }
    return build_network(std::move(entities), std::move(links));
}

}  // namespace svproto
