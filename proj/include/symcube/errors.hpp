#pragma once

#include <stdexcept>
#include <string>

namespace symcube {

/// Precondition violation on a public operation (bad weight, bad size, ...).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed JSON or a document that does not match the expected schema.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure. Signals an implementation bug, never a
/// valid state (e.g. a negative multiplicity after a multiset subtraction).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Input is explicitly outside the guarantee of the requested operation
/// (the cyclic invariant has no quadratic-size certificate bound).
class excluded_input : public std::domain_error {
public:
    explicit excluded_input(const std::string& what) : std::domain_error(what) {}
};

} // namespace symcube
