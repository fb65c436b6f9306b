#pragma once

#include <stdexcept>
#include <string>

namespace gencyc {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in incompatible rings or ambients.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument value was violated.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Negative power of an element whose constant term is not +1 or -1.
class InversionError : public Error {
public:
    using Error::Error;
};

/// Input lies outside the dimension window a formula is valid on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A checked identity or inequality failed; signals an engine bug or a bad axiom.
class InvariantFailure : public Error {
public:
    using Error::Error;
};

/// No axiom and no rule produces the requested product.
class Underivable : public Error {
public:
    Underivable(const std::string& missing)
        : Error("underivable product: no axiom or rule for " + missing), missing_(missing) {}

    const std::string& missing() const noexcept { return missing_; }

private:
    std::string missing_;
};

} // namespace gencyc
