#pragma once

#include <stdexcept>
#include <string>

namespace btconv {

/// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain an operation or identity is stated on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Reciprocal of a binomial coefficient that evaluates to zero.
class ZeroCoefficientError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Sequence access outside the generated or valid index range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A pair of the wrong transform kind was passed.
class KindMismatchError : public Error {
public:
    using Error::Error;
};

/// Unknown catalog entry, selector, or identity id.
class UnknownNameError : public Error {
public:
    using Error::Error;
};

/// A closed form failed its defining check.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace btconv
