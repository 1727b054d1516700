#pragma once

#include <stdexcept>
#include <string>

namespace lassos {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic combined two polynomials carrying different variable tags.
struct VariableMismatch : Error {
    using Error::Error;
};

/// exact_divide was asked for a quotient that leaves a remainder.
struct NonExactDivision : Error {
    using Error::Error;
};

/// A -> u conversion hit an odd A-exponent.
struct OddExponent : Error {
    using Error::Error;
};

/// An operation that needs a nonzero element received zero.
struct ZeroArgument : Error {
    using Error::Error;
};

/// Text or JSON input did not match the documented grammar.
struct ParseError : Error {
    using Error::Error;
};

/// A precondition outside the type system failed (zero twist entry,
/// non-knot closure, missing substitution image, guard exceeded, ...).
struct DomainError : Error {
    using Error::Error;
};

} // namespace lassos
