#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acmut {

// Base of every exception raised by the library. Parse and validation
// problems are reported as payloads, not exceptions; these types cover
// contract violations at API boundaries.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownEntityError : Error {
    using Error::Error;
};

struct InvalidPolicyError : Error {
    using Error::Error;
};

// The two sides of a comparison do not share entity declarations.
struct UniverseMismatchError : Error {
    using Error::Error;
};

struct NoSuchRuleError : Error {
    using Error::Error;
};

struct ModalityMismatchError : Error {
    using Error::Error;
};

struct DuplicateRuleError : Error {
    using Error::Error;
};

struct EmptyMutantSetError : Error {
    using Error::Error;
};

// Raised when a composed evolution fails; carries the 0-based index of the
// first failing delta.
struct EvolutionError : Error {
    EvolutionError(std::size_t index, const std::string& reason)
        : Error("delta " + std::to_string(index) + ": " + reason), delta_index(index) {}

    std::size_t delta_index;
};

}  // namespace acmut
