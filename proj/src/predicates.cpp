#include "svproto/predicates.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace svproto {

Predicate Predicate::eq(PropertyValue literal) {
    Predicate p(Kind::Eq);
    p.literal_ = std::move(literal);
    return p;
}

Predicate Predicate::neq(PropertyValue literal) {
    Predicate p(Kind::Neq);
    p.literal_ = std::move(literal);
    return p;
}

Predicate Predicate::gt(Decimal bound) {
    Predicate p(Kind::Gt);
    p.bound_ = bound;
    return p;
}

Predicate Predicate::ge(Decimal bound) {
    Predicate p(Kind::Ge);
    p.bound_ = bound;
    return p;
}

Predicate Predicate::lt(Decimal bound) {
    Predicate p(Kind::Lt);
    p.bound_ = bound;
    return p;
}

Predicate Predicate::le(Decimal bound) {
    Predicate p(Kind::Le);
    p.bound_ = bound;
    return p;
}

Predicate Predicate::superset_of(StringSet members) {
    Predicate p(Kind::SupersetOf);
    p.members_ = std::move(members);
    return p;
}

Predicate Predicate::subset_of(StringSet members) {
    Predicate p(Kind::SubsetOf);
    p.members_ = std::move(members);
    return p;
}

Predicate Predicate::contains(std::string member) {
    Predicate p(Kind::Contains);
    p.member_ = std::move(member);
    return p;
}

Predicate Predicate::in(std::set<PropertyValue> literals) {
    Predicate p(Kind::In);
    p.choices_ = std::move(literals);
    return p;
}

namespace {

// Payload relevant for each predicate kind, as a comparable tuple substitute.
bool payload_equal(const Predicate& a, const Predicate& b) {
    switch (a.kind()) {
        case Predicate::Kind::Eq:
        case Predicate::Kind::Neq:
            return a.literal() == b.literal();
        case Predicate::Kind::Gt:
        case Predicate::Kind::Ge:
        case Predicate::Kind::Lt:
        case Predicate::Kind::Le:
            return a.bound() == b.bound();
        case Predicate::Kind::SupersetOf:
        case Predicate::Kind::SubsetOf:
            return a.members() == b.members();
        case Predicate::Kind::Contains:
            return a.member() == b.member();
        case Predicate::Kind::In:
            return a.choices() == b.choices();
    }
    return false;
}

bool payload_less(const Predicate& a, const Predicate& b) {
    switch (a.kind()) {
        case Predicate::Kind::Eq:
        case Predicate::Kind::Neq:
            return a.literal() < b.literal();
        case Predicate::Kind::Gt:
        case Predicate::Kind::Ge:
        case Predicate::Kind::Lt:
        case Predicate::Kind::Le:
            return a.bound() < b.bound();
        case Predicate::Kind::SupersetOf:
        case Predicate::Kind::SubsetOf:
            return a.members() < b.members();
        case Predicate::Kind::Contains:
            return a.member() < b.member();
        case Predicate::Kind::In:
            return a.choices() < b.choices();
    }
    return false;
}

}  // namespace

bool operator==(const Predicate& a, const Predicate& b) {
    return a.kind() == b.kind() && payload_equal(a, b);
}

bool operator<(const Predicate& a, const Predicate& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    return payload_less(a, b);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

const char kSupersetUtf8[] = "\xE2\x8A\x83";  // ⊃

bool is_bare_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#';
}

bool is_bare_continue(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' ||
           c == '+' || c == '-';
}

bool is_bare_word(const std::string& s) {
    if (s.empty() || s == "true" || s == "false") return false;
    if (!is_bare_start(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), is_bare_continue);
}

class PredicateParser {
public:
    explicit PredicateParser(std::string_view text) : text_(text) {}

    Predicate parse() {
        skip_ws();
        Predicate result = parse_operator_and_operand();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        std::ostringstream msg;
        msg << "expected " << expected << " at offset " << pos_;
        throw SyntaxError(pos_, expected, msg.str());
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    std::string read_bare_word() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_bare_continue(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Predicate parse_operator_and_operand() {
        if (pos_ >= text_.size()) fail("predicate operator");
        // Two-character operators first so ">" does not shadow ">=".
        if (eat("!=")) return Predicate::neq(parse_literal());
        if (eat(">=")) return Predicate::ge(parse_number());
        if (eat("<=")) return Predicate::le(parse_number());
        if (eat("=")) return Predicate::eq(parse_literal());
        if (eat(">")) return Predicate::gt(parse_number());
        if (eat("<")) return Predicate::lt(parse_number());
        if (eat(kSupersetUtf8)) return Predicate::superset_of(parse_string_set());
        if (is_bare_start(text_[pos_])) {
            std::size_t start = pos_;
            std::string word = read_bare_word();
            if (word == "superset") return Predicate::superset_of(parse_string_set());
            if (word == "subset") return Predicate::subset_of(parse_string_set());
            if (word == "contains") return Predicate::contains(parse_string_operand());
            if (word == "in") return Predicate::in(parse_literal_set());
            pos_ = start;
        }
        fail("predicate operator");
    }

    Decimal parse_number() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
                ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
                 (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
            ++pos_;
        }
        auto parsed = Decimal::parse(text_.substr(start, pos_ - start));
        if (!parsed) {
            pos_ = start;
            fail("number");
        }
        return *parsed;
    }

    std::string parse_quoted_string() {
        // Caller consumed the opening quote.
        std::string out;
        while (true) {
            if (pos_ >= text_.size()) fail("closing '\"'");
            char c = text_[pos_];
            if (c == '"') {
                ++pos_;
                return out;
            }
            if (static_cast<unsigned char>(c) < 0x20) fail("escaped control character");
            if (c == '\\') {
                ++pos_;
                if (pos_ >= text_.size()) fail("escape character");
                char e = text_[pos_];
                switch (e) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    case 'u': {
                        if (pos_ + 4 >= text_.size()) fail("four hex digits");
                        unsigned code = 0;
                        for (int i = 1; i <= 4; ++i) {
                            char h = text_[pos_ + i];
                            unsigned digit;
                            if (h >= '0' && h <= '9') digit = h - '0';
                            else if (h >= 'a' && h <= 'f') digit = 10 + (h - 'a');
                            else if (h >= 'A' && h <= 'F') digit = 10 + (h - 'A');
                            else fail("four hex digits");
                            code = code * 16 + digit;
                        }
                        if (code >= 0xD800 && code <= 0xDFFF) fail("non-surrogate code point");
                        append_utf8(out, code);
                        pos_ += 4;
                        break;
                    }
                    default:
                        fail("escape character");
                }
                ++pos_;
                continue;
            }
            out += c;
            ++pos_;
        }
    }

    static void append_utf8(std::string& out, unsigned code) {
        if (code < 0x80) {
            out += static_cast<char>(code);
        } else if (code < 0x800) {
            out += static_cast<char>(0xC0 | (code >> 6));
            out += static_cast<char>(0x80 | (code & 0x3F));
        } else {
            out += static_cast<char>(0xE0 | (code >> 12));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (code & 0x3F));
        }
    }

    std::string parse_string_operand() {
        skip_ws();
        if (pos_ >= text_.size()) fail("string");
        if (eat("\"")) return parse_quoted_string();
        if (is_bare_start(text_[pos_])) {
            std::string word = read_bare_word();
            if (word != "true" && word != "false") return word;
            pos_ -= word.size();
        }
        fail("string");
    }

    PropertyValue parse_literal() {
        skip_ws();
        if (pos_ >= text_.size()) fail("literal");
        char c = text_[pos_];
        if (c == '"') {
            ++pos_;
            return PropertyValue::text(parse_quoted_string());
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            return PropertyValue::number(parse_number());
        }
        if (is_bare_start(c)) {
            std::string word = read_bare_word();
            if (word == "true") return PropertyValue::flag(true);
            if (word == "false") return PropertyValue::flag(false);
            return PropertyValue::text(word);
        }
        fail("literal");
    }

    template <typename Member>
    void parse_set(const char* what, Member member) {
        skip_ws();
        if (!eat("{")) fail("'{'");
        skip_ws();
        if (eat("}")) return;
        while (true) {
            skip_ws();
            member();
            skip_ws();
            if (eat("}")) return;
            if (!eat(",")) fail(what);
        }
    }

    StringSet parse_string_set() {
        StringSet out;
        parse_set("',' or '}'", [&] { out.insert(parse_string_operand()); });
        return out;
    }

    std::set<PropertyValue> parse_literal_set() {
        std::set<PropertyValue> out;
        parse_set("',' or '}'", [&] { out.insert(parse_literal()); });
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Predicate parse_predicate(std::string_view text) {
    return PredicateParser(text).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
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
    return out;
}

std::string string_text(const std::string& s) {
    return is_bare_word(s) ? s : quote(s);
}

std::string literal_text(const PropertyValue& v) {
    switch (v.kind()) {
        case PropertyValue::Kind::Text: return string_text(v.as_text());
        case PropertyValue::Kind::Number: return v.as_number().str();
        case PropertyValue::Kind::Flag: return v.as_flag() ? "true" : "false";
        default: break;
    }
    // Unreachable through the text grammar; printed defensively.
    return "\"<non-literal>\"";
}

std::string set_text(const StringSet& members) {
    std::string out = "{";
    bool first = true;
    for (const auto& m : members) {
        if (!first) out += ", ";
        first = false;
        out += string_text(m);
    }
    out += '}';
    return out;
}

std::string literal_set_text(const std::set<PropertyValue>& members) {
    std::string out = "{";
    bool first = true;
    for (const auto& m : members) {
        if (!first) out += ", ";
        first = false;
        out += literal_text(m);
    }
    out += '}';
    return out;
}

}  // namespace

std::string print_predicate(const Predicate& p) {
    switch (p.kind()) {
        case Predicate::Kind::Eq: return "= " + literal_text(p.literal());
        case Predicate::Kind::Neq: return "!= " + literal_text(p.literal());
        case Predicate::Kind::Gt: return "> " + p.bound().str();
        case Predicate::Kind::Ge: return ">= " + p.bound().str();
        case Predicate::Kind::Lt: return "< " + p.bound().str();
        case Predicate::Kind::Le: return "<= " + p.bound().str();
        case Predicate::Kind::SupersetOf: return "superset " + set_text(p.members());
        case Predicate::Kind::SubsetOf: return "subset " + set_text(p.members());
        case Predicate::Kind::Contains: return "contains " + string_text(p.member());
        case Predicate::Kind::In: return "in " + literal_set_text(p.choices());
    }
    return "";
}

// ---------------------------------------------------------------------------
// Evaluation

bool eval_predicate(const Predicate& p, const PropertyValue& value) {
    switch (p.kind()) {
        case Predicate::Kind::Eq:
            return value == p.literal();
        case Predicate::Kind::Neq:
            return value != p.literal();
        case Predicate::Kind::Gt:
            return value.is_number() && value.as_number() > p.bound();
        case Predicate::Kind::Ge:
            return value.is_number() && value.as_number() >= p.bound();
        case Predicate::Kind::Lt:
            return value.is_number() && value.as_number() < p.bound();
        case Predicate::Kind::Le:
            return value.is_number() && value.as_number() <= p.bound();
        case Predicate::Kind::SupersetOf:
            return value.is_set() &&
                   std::includes(value.as_set().begin(), value.as_set().end(),
                                 p.members().begin(), p.members().end());
        case Predicate::Kind::SubsetOf:
            return value.is_set() &&
                   std::includes(p.members().begin(), p.members().end(),
                                 value.as_set().begin(), value.as_set().end());
        case Predicate::Kind::Contains:
            return value.is_set() && value.as_set().count(p.member()) > 0;
        case Predicate::Kind::In:
            return p.choices().count(value) > 0;
    }
    return false;
}

PropertySet make_property_set(std::vector<std::pair<std::string, PropertyValue>> properties) {
    PropertySet out;
    for (auto& [name, value] : properties) {
        if (!out.emplace(name, std::move(value)).second) {
            throw Error("DuplicatePropertyName", "duplicate property name '" + name + "'");
        }
    }
    return out;
}

ConstraintSet make_constraint_set(std::vector<std::pair<std::string, Predicate>> constraints) {
    ConstraintSet out;
    for (auto& [name, predicate] : constraints) {
        if (!out.emplace(name, std::move(predicate)).second) {
            throw Error("DuplicateConstraintName", "duplicate constraint name '" + name + "'");
        }
    }
    return out;
}

bool satisfies(const Property& property, const PropertyConstraint& constraint) {
    return property.first == constraint.first &&
           eval_predicate(constraint.second, property.second);
}

bool instance_of(const PropertySet& object, const ConstraintSet& constraints) {
    for (const auto& [name, predicate] : constraints) {
        auto it = object.find(name);
        if (it == object.end() || !eval_predicate(predicate, it->second)) return false;
    }
    return true;
}

InstanceExplanation explain_instance_of(const PropertySet& object,
                                        const ConstraintSet& constraints) {
    InstanceExplanation out;
    for (const auto& [name, predicate] : constraints) {
        auto it = object.find(name);
        if (it == object.end()) {
            out.failures.push_back({name, InstanceFailure::Reason::MissingProperty});
        } else if (!eval_predicate(predicate, it->second)) {
            out.failures.push_back({name, InstanceFailure::Reason::NotSatisfied});
        }
    }
    out.instance = out.failures.empty();
    return out;
}

}  // namespace svproto
