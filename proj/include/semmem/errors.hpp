#pragma once

#include <stdexcept>
#include <string>

namespace semmem {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument to a library call (out-of-range value, empty input, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Input data violates a documented invariant (names the episode/step).
struct ValidationError : Error {
    using Error::Error;
};

// Malformed file syntax or schema (names the file and field).
struct FileParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// A training instance whose inside probability underflowed to exactly zero.
struct DegenerateInstanceError : Error {
    using Error::Error;
};

// A sequence with zero probability under the grammar; no parse exists.
struct UnparseableError : Error {
    using Error::Error;
};

// Prediction enumeration would exceed the configured budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Artifact format-version mismatch.
struct VersionError : Error {
    using Error::Error;
};

}  // namespace semmem
