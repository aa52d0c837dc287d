#pragma once

#include <stdexcept>
#include <string>

namespace reasonkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition (length mismatch, cap = 0, delta out of range, ...).
struct InputError : Error {
    using Error::Error;
};

// Operation requires a positive instance; caller must negate the tree first.
struct ContractError : Error {
    using Error::Error;
};

// Malformed external input (tree file, CSV cell, rational literal).
struct ParseError : Error {
    using Error::Error;
};

// Tree invariant violations, kept separate so callers can tell them apart.
struct ReadOnceError : Error {
    using Error::Error;
};
struct DanglingChildError : Error {
    using Error::Error;
};
struct StructureError : Error {
    using Error::Error;
};

// Oracle asked to run beyond its variable limit.
struct OracleLimitError : Error {
    using Error::Error;
};

} // namespace reasonkit
