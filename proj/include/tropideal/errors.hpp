#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropideal {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad JSON, non-prime p, inhomogeneous f, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Vector or weight lengths that do not agree.
class DimensionError : public InputError {
public:
    using InputError::InputError;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

/// Degenerate input such as the empty polynomial where a nonempty one is needed.
class DegenerateError : public InputError {
public:
    using InputError::InputError;
};

/// JSON or rational-literal parse failure.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// An enumeration would exceed the configured cap.
class SizeError : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant that must hold did not; indicates invalid input objects
/// (e.g. a sequence of layers that is not a tropical ideal) or an internal bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Global cap on the number of subsets any single enumeration may visit.
/// Default 5'000'000; overridable at runtime (the CLI reads TROPIDEAL_CAP).
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

/// Throws SizeError when `count` exceeds the cap.
void require_within_cap(std::uint64_t count, const std::string& what);

}  // namespace tropideal
