#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcond {

/// Malformed cyclotomic expression; carries the 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Dataset file does not match the schema; carries a JSON field path such as
/// "classes[2].powermaps".
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Ingested data violates a mathematical identity (orthogonality, Brauer
/// consistency, block labels, ...).  Always a sign of corrupted input.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pcond
