#pragma once

#include <stdexcept>
#include <string>

namespace kromatic {

// Malformed textual input (graph6, edge lists, invariant files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input is valid but outside a compile-time cap of this implementation.
class CapabilityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violation on otherwise well-formed values.
class DomainError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact linear system that should have been consistent or nonsingular was
// not; carries the provenance of the offending row. Signals an upstream
// counting bug, not a user error.
class InconsistentSystemError : public std::runtime_error {
public:
    InconsistentSystemError(const std::string& msg, std::string row_provenance)
        : std::runtime_error(msg + " [row: " + row_provenance + "]"),
          provenance_(std::move(row_provenance)) {}
    const std::string& row_provenance() const { return provenance_; }

private:
    std::string provenance_;
};

}  // namespace kromatic
