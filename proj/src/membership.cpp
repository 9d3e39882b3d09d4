#include "svproto/membership.hpp"

namespace svproto {

MembershipExplanation relational_member(const std::string& entity_id,
                                        const std::string& class_id,
                                        const ServiceNetwork& network,
                                        const ServiceNetworkSchema& schema) {
    const Entity& entity = network.entity(entity_id);
    const EntityClass& cls = schema.entity_class(class_id);

    MembershipExplanation out;
    if (!instance_of(entity.properties, cls.constraints)) {
        out.failed_conditions.push_back({1, cls.id});
    }
    // Condition 2: every link class leaving this class needs some outgoing
    // link whose descriptor is an instance of its descriptor class.
    for (std::size_t lc_index : schema.link_classes_from(class_id)) {
        const LinkClass& lc = schema.link_classes()[lc_index];
        bool matched = false;
        for (std::size_t link_index : network.links_from(entity_id)) {
            if (instance_of(network.links()[link_index].descriptor, lc.descriptor)) {
                matched = true;
                break;
            }
        }
        if (!matched) out.failed_conditions.push_back({2, schema.link_class_label(lc_index)});
    }
    // Condition 3: symmetric for link classes arriving at this class.
    for (std::size_t lc_index : schema.link_classes_to(class_id)) {
        const LinkClass& lc = schema.link_classes()[lc_index];
        bool matched = false;
        for (std::size_t link_index : network.links_to(entity_id)) {
            if (instance_of(network.links()[link_index].descriptor, lc.descriptor)) {
                matched = true;
                break;
            }
        }
        if (!matched) out.failed_conditions.push_back({3, schema.link_class_label(lc_index)});
    }
    out.member = out.failed_conditions.empty();
    return out;
}

bool is_relational_member(const std::string& entity_id, const std::string& class_id,
                          const ServiceNetwork& network,
                          const ServiceNetworkSchema& schema) {
    return relational_member(entity_id, class_id, network, schema).member;
}

bool link_full_member(const Link& link, const LinkClass& link_class,
                      const ServiceNetwork& network,
                      const ServiceNetworkSchema& schema) {
    if (!network.has_link(link)) {
        throw Error("UnknownLink", "link '" + link.source + "->" + link.destination +
                                       "' is not in the network");
    }
    if (!schema.has_link_class(link_class)) {
        throw Error("UnknownLinkClass", "link class '" + link_class.source + "->" +
                                            link_class.destination +
                                            "' is not in the schema");
    }
    return instance_of(network.entity(link.source).properties,
                       schema.entity_class(link_class.source).constraints) &&
           instance_of(network.entity(link.destination).properties,
                       schema.entity_class(link_class.destination).constraints) &&
           instance_of(link.descriptor, link_class.descriptor);
}

}  // namespace svproto
