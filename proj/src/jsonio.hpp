#pragma once

#include <map>
#include <string>
#include <vector>

#include "svproto/decimal.hpp"
#include "svproto/errors.hpp"

namespace svproto::jsonio {

// Minimal JSON document tree.  Numbers are exact decimals captured from the
// raw token, so parsing and re-emitting a canonical document is byte-stable.
// Object members are kept sorted by key (JSON objects are unordered maps;
// canonical output sorts keys).
struct JsonValue {
    enum class Kind { Null, Flag, Number, Text, Array, Object };

    Kind kind = Kind::Null;
    bool flag = false;
    Decimal number;
    std::string text;
    std::vector<JsonValue> array;
    std::map<std::string, JsonValue> object;

    static JsonValue null();
    static JsonValue make_flag(bool value);
    static JsonValue make_number(Decimal value);
    static JsonValue make_text(std::string value);
    static JsonValue make_array();
    static JsonValue make_object();

    const JsonValue* find(const std::string& key) const;  // object member or nullptr
};

// Throws ParseError (line/column) for malformed JSON and SchemaViolation for
// duplicate object keys or number literals beyond exact-decimal precision.
JsonValue parse_json(const std::string& text);

// Canonical form: two-space indent, sorted keys, exact decimal number
// literals, "\n" terminated.
std::string emit_json(const JsonValue& value);

}  // namespace svproto::jsonio
