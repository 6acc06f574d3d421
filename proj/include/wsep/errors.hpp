#pragma once

#include <stdexcept>
#include <string>

namespace wsep {

// bad arguments, malformed structures, failed preconditions
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// enumeration would exceed the configured budget
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// thrown by the embedding certifier; carries the two offending items
struct embedding_violation : std::runtime_error {
    std::string first, second;
    embedding_violation(const std::string& what, std::string a, std::string b)
        : std::runtime_error(what + ": " + a + " / " + b), first(std::move(a)), second(std::move(b)) {}
};

// document-level problems (schema, version, invariants on load)
struct parse_error : std::runtime_error {
    std::string location;
    parse_error(const std::string& what, std::string loc = {})
        : std::runtime_error(loc.empty() ? what : loc + ": " + what), location(std::move(loc)) {}
};

} // namespace wsep
