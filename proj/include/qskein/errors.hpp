#pragma once

#include <stdexcept>
#include <string>

namespace qskein {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed diagram or rule-set text.
struct parse_error : error {
    using error::error;
};

// Division by zero, inverse of zero, non-dominant weights and the like.
struct domain_error : error {
    using error::error;
};

// Denominator vanishes at the requested specialization point.
struct pole_error : error {
    using error::error;
};

// Rule set lacks a rule needed by the reduction, or fails validation.
struct ruleset_error : error {
    using error::error;
};

// Boundary arity outside the range where the basis is guaranteed.
struct arity_error : error {
    using error::error;
};

// A structural invariant that the algorithms guarantee was violated.
struct internal_error : error {
    using error::error;
};

}  // namespace qskein
