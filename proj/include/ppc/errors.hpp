#pragma once

#include <stdexcept>

namespace ppc {

// Base for every domain error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Composition text did not parse.
struct ParseError : Error {
    using Error::Error;
};

// Construction invariant violated (empty part list, zero part, sum overflow).
struct InvalidComposition : Error {
    using Error::Error;
};

// Operation requires a parity palindrome composition.
struct NotAPpc : Error {
    using Error::Error;
};

// C1/C2 applied to a composition whose end part is not 1.
struct RuleNotApplicable : Error {
    using Error::Error;
};

// Total below the smallest one the production system handles.
struct TotalTooSmall : Error {
    using Error::Error;
};

// Enumeration argument outside [1, cap].
struct NOutOfRange : Error {
    using Error::Error;
};

// Forest max_total has the wrong parity.
struct ParityMismatch : Error {
    using Error::Error;
};

// Result would not fit in 64 bits.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace ppc
