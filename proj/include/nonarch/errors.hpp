#pragma once

#include <stdexcept>
#include <string>

namespace nonarch {

// Arithmetic on field elements that has no defined result (1/0, 0^-1, ...).
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Input outside an operation's domain: wrong field, constant phase where a
// nonconstant one is required, characteristic too small, exponent out of range.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A precondition that callers promise to establish (e.g. is_sp before
// sp-specific accessors) was violated.
struct PreconditionFailed : std::logic_error {
    explicit PreconditionFailed(const std::string& what) : std::logic_error(what) {}
};

// An enumeration or precision request exceeds the configured cap.  Carries the
// offending size so harnesses can report it.
struct ResourceLimit : std::runtime_error {
    ResourceLimit(const std::string& what, double requested, double cap)
        : std::runtime_error(what + " (requested ~" + std::to_string(requested) +
                             ", cap " + std::to_string(cap) + ")"),
          requested_size(requested), cap_size(cap) {}
    double requested_size;
    double cap_size;
};

}  // namespace nonarch
