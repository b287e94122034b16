#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgrig {

// Malformed input objects: walks whose steps do not chain, out-of-range
// vertices, singular lattice bases, missing assignment entries.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A well-formed input that violates an operation's precondition
// (e.g. asking for the decomposition of a graph that is not (2,2,k)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Exhaustive enumeration requested beyond its budget.
class BudgetError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Two independent decision routes disagreed, or a post-condition
// self-check failed. Always indicates a bug or a numerical breakdown.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Random direction sampling did not produce a generic direction network
// within the retry cap.
class GenericityError : public std::runtime_error {
public:
    GenericityError(const std::string& what, std::uint64_t seed)
        : std::runtime_error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace cgrig
