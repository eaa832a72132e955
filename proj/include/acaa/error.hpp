#pragma once

#include <stdexcept>
#include <string>

namespace acaa {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live over different fields (Q vs F_p, or F_p vs F_q).
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Exhaustive searches refuse parameter combinations that are too large.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

} // namespace acaa
