#pragma once

#include <stdexcept>
#include <string>

namespace qpxval {

// Precondition violations of the documented operation contracts.
// We reuse std::domain_error directly so callers can catch the standard type.

// Inputs that are well-formed but outside the supported scope
// (residue towers deeper than one extension step, etc.).
class unsupported_scope : public std::domain_error {
public:
    explicit unsupported_scope(const std::string& what) : std::domain_error(what) {}
};

// Malformed textual/JSON input. Mapped to exit code 2 by the CLI.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// "Impossible" states: broken internal invariants, not user error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qpxval
