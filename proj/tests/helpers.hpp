#pragma once

#include <string>

#include "svproto/formats.hpp"

namespace testutil {

using namespace svproto;

inline std::string fixture_path(const std::string& name) {
    return std::string(SVPROTO_FIXTURES_DIR) + "/" + name;
}

inline Document fixture(const std::string& name) {
    return load_document_file(fixture_path(name));
}

inline ServiceNetwork fixture_network(const std::string& name) {
    return fixture(name).network.value();
}

inline ServiceNetworkSchema fixture_schema(const std::string& name) {
    return fixture(name).schema.value();
}

inline ProtocolBundle fixture_protocol(const std::string& name) {
    return fixture(name).protocol.value();
}

inline PropertyValue num(std::int64_t value) {
    return PropertyValue::number(Decimal::from_int(value));
}

inline PropertyValue num(const std::string& text) {
    return PropertyValue::number(Decimal::parse(text).value());
}

inline PropertyValue txt(std::string value) { return PropertyValue::text(std::move(value)); }

inline PropertyValue flag(bool value) { return PropertyValue::flag(value); }

inline PropertyValue set(StringSet members) { return PropertyValue::set(std::move(members)); }

inline Predicate pred(const std::string& text) { return parse_predicate(text); }

}  // namespace testutil
