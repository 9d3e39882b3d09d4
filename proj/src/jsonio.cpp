#include "jsonio.hpp"

#include <nlohmann/json.hpp>

#include <utility>

namespace svproto::jsonio {

JsonValue JsonValue::null() { return JsonValue{}; }

JsonValue JsonValue::make_flag(bool value) {
    JsonValue v;
    v.kind = Kind::Flag;
    v.flag = value;
    return v;
}

JsonValue JsonValue::make_number(Decimal value) {
    JsonValue v;
    v.kind = Kind::Number;
    v.number = value;
    return v;
}

JsonValue JsonValue::make_text(std::string value) {
    JsonValue v;
    v.kind = Kind::Text;
    v.text = std::move(value);
    return v;
}

JsonValue JsonValue::make_array() {
    JsonValue v;
    v.kind = Kind::Array;
    return v;
}

JsonValue JsonValue::make_object() {
    JsonValue v;
    v.kind = Kind::Object;
    return v;
}

const JsonValue* JsonValue::find(const std::string& key) const {
    if (kind != Kind::Object) return nullptr;
    auto it = object.find(key);
    return it == object.end() ? nullptr : &it->second;
}

namespace {

// SAX handler building the JsonValue tree.  Detects duplicate object keys as
// they stream by and reports them with a JSON path; captures raw number
// tokens so decimals survive exactly.
class TreeBuilder {
public:
    explicit TreeBuilder(const std::string& text) : text_(text) {}

    JsonValue take_root() { return std::move(root_); }

    bool null() { return add(JsonValue::null()); }
    bool boolean(bool value) { return add(JsonValue::make_flag(value)); }

    bool number_integer(std::int64_t value) {
        return add(JsonValue::make_number(Decimal::from_int(value)));
    }

    bool number_unsigned(std::uint64_t value) {
        if (value > static_cast<std::uint64_t>(INT64_MAX)) {
            throw SchemaViolation(value_path(), "integer literal out of range");
        }
        return add(JsonValue::make_number(Decimal::from_int(static_cast<std::int64_t>(value))));
    }

    bool number_float(double, const std::string& raw) {
        auto parsed = Decimal::parse(raw);
        if (!parsed) {
            throw SchemaViolation(value_path(),
                                  "number literal '" + raw + "' exceeds supported precision");
        }
        return add(JsonValue::make_number(*parsed));
    }

    bool string(std::string& value) { return add(JsonValue::make_text(value)); }

    bool binary(nlohmann::json::binary_t&) { return true; }  // unreachable from text

    bool start_object(std::size_t) {
        stack_.push_back({JsonValue::make_object(), "", false});
        return true;
    }

    bool key(std::string& name) {
        Frame& frame = stack_.back();
        if (frame.value.object.count(name)) {
            throw SchemaViolation(container_path() + "." + name, "duplicate key '" + name + "'");
        }
        frame.pending_key = name;
        frame.key_active = true;
        return true;
    }

    bool end_object() { return close(); }

    bool start_array(std::size_t) {
        stack_.push_back({JsonValue::make_array(), "", false});
        return true;
    }

    bool end_array() { return close(); }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::json::exception& ex) {
        int line = 1;
        int column = 1;
        for (std::size_t i = 0; i < position && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, ex.what());
    }

private:
    struct Frame {
        JsonValue value;
        std::string pending_key;
        bool key_active;
    };

    std::string container_path() const {
        std::string path = "$";
        for (std::size_t i = 0; i + 1 < stack_.size(); ++i) {
            path += step_text(stack_[i]);
        }
        return path;
    }

    std::string value_path() const {
        std::string path = "$";
        for (const Frame& frame : stack_) path += step_text(frame);
        return path;
    }

    static std::string step_text(const Frame& frame) {
        if (frame.value.kind == JsonValue::Kind::Object) return "." + frame.pending_key;
        return "[" + std::to_string(frame.value.array.size()) + "]";
    }

    bool add(JsonValue value) {
        if (stack_.empty()) {
            root_ = std::move(value);
            return true;
        }
        Frame& frame = stack_.back();
        if (frame.value.kind == JsonValue::Kind::Object) {
            frame.value.object.emplace(frame.pending_key, std::move(value));
            frame.key_active = false;
        } else {
            frame.value.array.push_back(std::move(value));
        }
        return true;
    }

    bool close() {
        JsonValue done = std::move(stack_.back().value);
        stack_.pop_back();
        return add(std::move(done));
    }

    const std::string& text_;
    std::vector<Frame> stack_;
    JsonValue root_;
};

void escape_into(const std::string& s, std::string& out) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    const char* hex = "0123456789abcdef";
                    out += "\\u00";
                    out += hex[c >> 4];
                    out += hex[c & 0xF];
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

void emit_into(const JsonValue& v, std::string& out, int depth) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (v.kind) {
        case JsonValue::Kind::Null:
            out += "null";
            return;
        case JsonValue::Kind::Flag:
            out += v.flag ? "true" : "false";
            return;
        case JsonValue::Kind::Number:
            out += v.number.str();
            return;
        case JsonValue::Kind::Text:
            escape_into(v.text, out);
            return;
        case JsonValue::Kind::Array: {
            if (v.array.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.array.size(); ++i) {
                out += inner;
                emit_into(v.array[i], out, depth + 1);
                if (i + 1 < v.array.size()) out += ',';
                out += '\n';
            }
            out += indent;
            out += ']';
            return;
        }
        case JsonValue::Kind::Object: {
            if (v.object.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t i = 0;
            for (const auto& [key, value] : v.object) {
                out += inner;
                escape_into(key, out);
                out += ": ";
                emit_into(value, out, depth + 1);
                if (++i < v.object.size()) out += ',';
                out += '\n';
            }
            out += indent;
            out += '}';
            return;
        }
    }
}

}  // namespace

JsonValue parse_json(const std::string& text) {
    TreeBuilder builder(text);
    nlohmann::json::sax_parse(text, &builder);
    return builder.take_root();
}

std::string emit_json(const JsonValue& value) {
    std::string out;
    emit_into(value, out, 0);
    out += '\n';
    return out;
}

}  // namespace svproto::jsonio
