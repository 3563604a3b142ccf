#pragma once

#include <stdexcept>
#include <string>

namespace ktoric {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad stack data, parse failures, bad indices).
class InputError : public Error {
public:
    using Error::Error;
};

/// Operands live over different grading groups or presentations.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// A computation was refused because its hypotheses are not verified.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A group homomorphism or induced map failed its well-definedness check.
class MapError : public Error {
public:
    using Error::Error;
};

} // namespace ktoric
