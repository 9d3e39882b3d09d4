#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "svproto/values.hpp"

namespace svproto {

// Unary predicate over property values.  Text form (canonical on the right):
//
//   predicate := "=" literal | "!=" literal
//              | (">" | ">=" | "<" | "<=") number
//              | "superset" set | "subset" set        ("⊃" is an input alias
//              | "contains" string                     for "superset")
//              | "in" set
//   set       := "{" [ member ("," member)* ] "}"
//   literal   := string | number | "true" | "false"
//
// Set members and literals may be written as bare words ([A-Za-z_#] followed
// by [A-Za-z0-9_#+-]*) which denote strings; "superset"/"subset" sets hold
// strings only, "in" sets hold any literals.  Evaluation is total and never
// errors: ordered and set operators applied to a value of a mismatched kind
// yield false; "="/"!=" compare structurally, so values of different kinds
// are simply unequal.  "superset" is non-strict (every set is a superset of
// itself).
class Predicate {
public:
    enum class Kind { Eq, Neq, Gt, Ge, Lt, Le, SupersetOf, SubsetOf, Contains, In };

    static Predicate eq(PropertyValue literal);
    static Predicate neq(PropertyValue literal);
    static Predicate gt(Decimal bound);
    static Predicate ge(Decimal bound);
    static Predicate lt(Decimal bound);
    static Predicate le(Decimal bound);
    static Predicate superset_of(StringSet members);
    static Predicate subset_of(StringSet members);
    static Predicate contains(std::string member);
    static Predicate in(std::set<PropertyValue> literals);

    Kind kind() const { return kind_; }
    const PropertyValue& literal() const { return literal_; }          // Eq, Neq
    const Decimal& bound() const { return bound_; }                    // Gt, Ge, Lt, Le
    const StringSet& members() const { return members_; }             // SupersetOf, SubsetOf
    const std::string& member() const { return member_; }             // Contains
    const std::set<PropertyValue>& choices() const { return choices_; }  // In

    friend bool operator==(const Predicate& a, const Predicate& b);
    friend bool operator<(const Predicate& a, const Predicate& b);

private:
    explicit Predicate(Kind kind) : kind_(kind) {}

    Kind kind_;
    PropertyValue literal_;
    Decimal bound_;
    StringSet members_;
    std::string member_;
    std::set<PropertyValue> choices_;
};

// Throws SyntaxError (byte offset + expected-token hint) on bad input.
Predicate parse_predicate(std::string_view text);

// Canonical text; parse_predicate(print_predicate(p)) == p for every p.
std::string print_predicate(const Predicate& predicate);

// Total: never throws, mismatched kinds evaluate to false.
bool eval_predicate(const Predicate& predicate, const PropertyValue& value);

// Named constraints with unique names, iterated in name order.
using ConstraintSet = std::map<std::string, Predicate>;
using PropertyConstraint = std::pair<const std::string, Predicate>;

// Builds a constraint set from a list; throws Error("DuplicateConstraintName")
// on a repeated name.
ConstraintSet make_constraint_set(std::vector<std::pair<std::string, Predicate>> constraints);

// Name equality plus predicate application.
bool satisfies(const Property& property, const PropertyConstraint& constraint);

// Every constraint is matched by some property of the object; properties
// without a matching constraint are ignored.
bool instance_of(const PropertySet& object, const ConstraintSet& constraints);

// Per-constraint failure detail behind a false instance_of verdict.
struct InstanceFailure {
    enum class Reason { MissingProperty, NotSatisfied };
    std::string constraint_name;
    Reason reason;

    friend bool operator==(const InstanceFailure& a, const InstanceFailure& b) {
        return a.constraint_name == b.constraint_name && a.reason == b.reason;
    }
};

struct InstanceExplanation {
    bool instance = false;
    std::vector<InstanceFailure> failures;  // all failing constraints, name order
};

InstanceExplanation explain_instance_of(const PropertySet& object, const ConstraintSet& constraints);

}  // namespace svproto
