#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "svproto/decimal.hpp"
#include "svproto/errors.hpp"

namespace svproto {

class PropertyValue;

// Named property values with unique names, iterated in name order.  Entities,
// link descriptors and nested object values all share this one representation
// (and therefore one matching code path).
using PropertySet = std::map<std::string, PropertyValue>;

// A property is a named value; spelled as a pair so PropertySet entries can be
// passed around directly.
using Property = std::pair<const std::string, PropertyValue>;

using StringSet = std::set<std::string>;

// One of: text, number (exact decimal), flag, finite set of strings, or a
// nested property set.  Values form finite trees and compare structurally.
class PropertyValue {
public:
    enum class Kind { Text, Number, Flag, Set, Nested };

    PropertyValue() : value_(std::string()) {}

    static PropertyValue text(std::string s) { return PropertyValue(std::move(s)); }
    static PropertyValue number(Decimal d) { return PropertyValue(d); }
    static PropertyValue flag(bool b) { return PropertyValue(b); }
    static PropertyValue set(StringSet s) { return PropertyValue(std::move(s)); }
    static PropertyValue nested(PropertySet p) { return PropertyValue(std::move(p)); }

    Kind kind() const { return static_cast<Kind>(value_.index()); }

    bool is_text() const { return kind() == Kind::Text; }
    bool is_number() const { return kind() == Kind::Number; }
    bool is_flag() const { return kind() == Kind::Flag; }
    bool is_set() const { return kind() == Kind::Set; }
    bool is_nested() const { return kind() == Kind::Nested; }

    const std::string& as_text() const { return std::get<std::string>(value_); }
    const Decimal& as_number() const { return std::get<Decimal>(value_); }
    bool as_flag() const { return std::get<bool>(value_); }
    const StringSet& as_set() const { return std::get<StringSet>(value_); }
    const PropertySet& as_nested() const { return std::get<PropertySet>(value_); }

    friend bool operator==(const PropertyValue& a, const PropertyValue& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const PropertyValue& a, const PropertyValue& b) {
        return !(a == b);
    }
    // Total order (kind rank, then value); used only for canonical sorting.
    friend bool operator<(const PropertyValue& a, const PropertyValue& b) {
        return a.value_ < b.value_;
    }

private:
    template <typename T>
    explicit PropertyValue(T v) : value_(std::move(v)) {}

    std::variant<std::string, Decimal, bool, StringSet, PropertySet> value_;
};

// Builds a property set from a list; throws Error("DuplicatePropertyName") on
// a repeated name.
PropertySet make_property_set(std::vector<std::pair<std::string, PropertyValue>> properties);

}  // namespace svproto
