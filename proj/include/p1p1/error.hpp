#pragma once

#include <stdexcept>
#include <string>

namespace p1p1 {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain. The CLI maps
// these to exit code 2.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// Two divisor classes (or a class and a context) disagree on s.
class ContextError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class UnsupportedRange : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InvalidCertificate : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// An enumeration bound was too small to certify its result.
class BoundTooSmall : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// A closed-form count was asked for at a bidegree it does not cover.
class ExcludedCase : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// An internal cross-check disagreed with a computed result. Exit code 3.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

class SamplingError : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

// One step of a witness construction did not hold; the message names it.
class ConstructionFailure : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

} // namespace p1p1
