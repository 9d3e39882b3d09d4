#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svproto {

// Every failure carries a stable machine-readable code next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Predicate text rejected; offset is the byte position where parsing stopped.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::string expected, const std::string& message)
        : Error("SyntaxError", message), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Document text is not valid JSON.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("ParseError", message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Document is valid JSON but breaks the format; path locates the offending node.
class SchemaViolation : public Error {
public:
    SchemaViolation(std::string json_path, const std::string& message)
        : Error("SchemaViolation", message), path_(std::move(json_path)) {}

    SchemaViolation(std::string code, std::string json_path, const std::string& message)
        : Error(std::move(code), message), path_(std::move(json_path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class UnsupportedVersion : public SchemaViolation {
public:
    UnsupportedVersion(std::string json_path, const std::string& message)
        : SchemaViolation("UnsupportedVersion", std::move(json_path), message) {}
};

}  // namespace svproto
