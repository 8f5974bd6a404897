#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace carpet {

// Malformed input text (pattern files, similitude literals). Line numbers
// are 1-based; 0 means the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a structural invariant. `invariant` is a
// short stable name of the violated rule.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string invariant, const std::string& what)
        : std::invalid_argument(what), invariant_(std::move(invariant)) {}
    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A computation that would exceed a configured memory or state budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A well-defined request the exact algebra cannot serve (e.g. applying an
// irrational scale to a rational point).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateError : public DomainError {
public:
    using DomainError::DomainError;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace carpet
