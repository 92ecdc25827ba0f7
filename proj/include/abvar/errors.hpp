#pragma once

#include <stdexcept>
#include <string>

namespace abvar {

// Base of all library errors. InputError covers malformed or out-of-domain
// input (CLI exit 2); ResourceError covers exceeded computation caps
// (CLI exit 4).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct ResourceError : Error {
    using Error::Error;
};

struct EmptySequenceError : InputError {
    using InputError::InputError;
};

struct NegativeDimensionError : InputError {
    using InputError::InputError;
};

struct NonpositiveGError : InputError {
    using InputError::InputError;
};

struct NotPrimeError : InputError {
    using InputError::InputError;
};

struct SmallCharacteristicError : InputError {
    using InputError::InputError;
};

struct SingularCurveError : InputError {
    using InputError::InputError;
};

struct MixedCharacteristicError : InputError {
    using InputError::InputError;
};

struct EmptyListError : InputError {
    using InputError::InputError;
};

struct RingMismatchError : InputError {
    using InputError::InputError;
};

struct InvalidRingError : InputError {
    using InputError::InputError;
};

struct SearchSpaceTooLargeError : ResourceError {
    using ResourceError::ResourceError;
};

struct FieldTooLargeError : ResourceError {
    using ResourceError::ResourceError;
};

// g beyond the exact-integer range supported by 128-bit binomials.
struct GTooLargeError : ResourceError {
    using ResourceError::ResourceError;
};

struct OverflowError : ResourceError {
    using ResourceError::ResourceError;
};

} // namespace abvar
