#pragma once
// Error taxonomy shared by all modules. Everything derives from az::Error so
// callers (notably the CLI) can map any domain failure to a usage/input error.

#include <stdexcept>
#include <string>

namespace az {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ground set exceeds the table cap (2^n entries), or n < 1.
struct GroundSetTooLarge : Error {
    using Error::Error;
};

// A mask has bits outside [0, 2^n).
struct InvalidMask : Error {
    using Error::Error;
};

// Operation over two families with different ground-set sizes.
struct MismatchedGroundSet : Error {
    using Error::Error;
};

// A family must have at least one member.
struct EmptyFamily : Error {
    using Error::Error;
};

// The empty set appeared where a family of nonempty sets is required.
struct EmptySetInFamily : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Malformed textual input (rational strings, JSON documents).
struct ParseError : Error {
    using Error::Error;
};

// Some factor a*k + m vanishes inside the active index range.
struct PoleError : Error {
    int offending_k;
    explicit PoleError(int k)
        : Error("a*k + m = 0 at k = " + std::to_string(k)), offending_k(k) {}
};

// interval_sum needs a nonempty A with A included in B.
struct BadInterval : Error {
    using Error::Error;
};

// The (A_i, B_i) cross-containment condition failed.
struct InvalidPairedSystem : Error {
    using Error::Error;
};

struct NotAntichain : Error {
    using Error::Error;
};

// A theorem hypothesis does not hold for the given instance; the message
// names the violated hypothesis and the offending member or index.
struct HypothesisViolated : Error {
    using Error::Error;
};

// A weight function evaluated to zero where it must not.
struct ZeroWeight : Error {
    using Error::Error;
};

// Requested more distinct members than the universe holds.
struct SizeTooLarge : Error {
    using Error::Error;
};

// Rejection sampling hit its retry bound.
struct GenerationExhausted : Error {
    using Error::Error;
};

}  // namespace az
