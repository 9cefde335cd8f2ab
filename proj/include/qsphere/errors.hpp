#pragma once

/**
 * @file errors.hpp
 * @brief Exception types raised by the engine.
 *
 * Mathematical "negative" outcomes (a relation is violated, a descent
 * stalls) are ordinary return values; exceptions are reserved for
 * precondition failures and malformed input.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsphere {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& at)
        : Error("denominator vanishes at q = " + at) {}
};

class ArityMismatch : public Error {
public:
    ArityMismatch(int lhs, int rhs)
        : Error("arity mismatch: n = " + std::to_string(lhs) + " vs n = " + std::to_string(rhs)) {}
};

class InvalidQ : public Error {
public:
    explicit InvalidQ(const std::string& q) : Error("deformation parameter q = " + q + " is not in [0,1)") {}
};

class QZeroUnsupported : public Error {
public:
    QZeroUnsupported() : Error("q = 0 unsupported for basis: the e(j,k,l) are not linearly independent") {}
};

class NotCertifiable : public Error {
public:
    explicit NotCertifiable(const std::string& why) : Error("not certifiable: " + why) {}
};

class NotUnit : public Error {
public:
    explicit NotUnit(const std::string& lambda) : Error("scalar " + lambda + " does not have modulus 1") {}
};

class FiltrationViolation : public Error {
public:
    FiltrationViolation(long degree, long required)
        : Error("element has filtration degree " + std::to_string(degree) + " < " + std::to_string(required)) {}
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

/// Parse failures carry the byte offset into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnknownGenerator : public ParseError {
public:
    UnknownGenerator(const std::string& token, std::size_t position)
        : ParseError("unknown generator '" + token + "'", position) {}
};

class NegativeWordPower : public ParseError {
public:
    explicit NegativeWordPower(std::size_t position)
        : ParseError("negative power of a noncommutative expression", position) {}
};

}  // namespace qsphere
