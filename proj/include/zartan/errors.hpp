#pragma once

#include <stdexcept>
#include <string>

namespace zartan {

// Error categories map onto CLI exit codes:
//   InputError       -> 1  (parse / semantic / bad geometry in the input)
//   UnsupportedError -> 2  (point kinds or extensions outside the scope)
//   InvalidityError  -> 3  (certificate that an alleged point is not
//                           maximal / not prime, e.g. a zero divisor)
//   InvariantError   -> 4  (an identity the theory guarantees failed)

struct ZartanError : std::runtime_error {
    explicit ZartanError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InputError : ZartanError {
    using ZartanError::ZartanError;
};

struct ParseError : InputError {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int l, int c)
        : InputError("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), column(c) {}
};

struct SemanticError : InputError {
    using InputError::InputError;
};

struct PointNotOnScheme : InputError {
    using InputError::InputError;
};

struct PointImageMismatch : InputError {
    using InputError::InputError;
};

struct UnsupportedError : ZartanError {
    using ZartanError::ZartanError;
};

struct UnsupportedPoint : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};

struct NotZeroDimensional : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};

struct NotFiniteOverBase : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};

struct UnsupportedExtension : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};

struct UnitIdeal : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};

struct InvalidityError : ZartanError {
    // Printable certificate (a zero divisor, a reducible factor, ...).
    std::string witness;
    InvalidityError(const std::string& msg, std::string w)
        : ZartanError(msg), witness(std::move(w)) {}
};

struct ZeroDivisorWitness : InvalidityError {
    ZeroDivisorWitness(const std::string& msg, std::string w)
        : InvalidityError(msg, std::move(w)) {}
};

struct ReducibleTowerStep : InvalidityError {
    ReducibleTowerStep(const std::string& msg, std::string w)
        : InvalidityError(msg, std::move(w)) {}
};

struct PointNotMaximal : InvalidityError {
    PointNotMaximal(const std::string& msg, std::string w)
        : InvalidityError(msg, std::move(w)) {}
};

struct InvariantViolation : ZartanError {
    using ZartanError::ZartanError;
};

struct ThetaNotInvertible : ZartanError {
    using ZartanError::ZartanError;
};

}  // namespace zartan
