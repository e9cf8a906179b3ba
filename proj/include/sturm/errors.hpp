#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sturm {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation that needs a non-empty word was given the empty word.
struct EmptyWordError : Error {
    explicit EmptyWordError(const char* op) : Error(std::string(op) + ": word is empty") {}
};

// Invalid textual input: word letters, oc bits, or a directive spec.
struct ParseError : Error {
    using Error::Error;
};

// A finite directive sequence ran out of terms.
struct InsufficientDirectiveError : Error {
    using Error::Error;
};

// An oc sequence no word can have (empty, or first bit 0).
struct InvalidOcError : Error {
    using Error::Error;
};

// No finite Sturmian word matches the given oc sequence; `position` is the
// first bit that cannot be satisfied.
struct NotSturmianOcError : Error {
    std::size_t position;
    explicit NotSturmianOcError(std::size_t pos)
        : Error("no finite Sturmian word matches the oc sequence (first inconsistent bit at position " +
                std::to_string(pos) + ")"),
          position(pos) {}
};

// An exhaustive enumeration was requested above its hard guard.
struct LengthGuardError : Error {
    using Error::Error;
};

} // namespace sturm
