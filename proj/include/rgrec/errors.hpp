#pragma once

#include <stdexcept>
#include <string>

namespace rgrec {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VariableCountError : public Error {
public:
    using Error::Error;
};

// Antiderivative hit a nonzero t^{-1} coefficient.
class LogTermError : public Error {
public:
    using Error::Error;
};

// Zero substituted into a negative power.
class PoleError : public Error {
public:
    using Error::Error;
};

class OddExponentError : public Error {
public:
    using Error::Error;
};

class NonInjectiveMapError : public Error {
public:
    using Error::Error;
};

class MissingDependency : public Error {
public:
    using Error::Error;
};

class NonLaurentError : public Error {
public:
    using Error::Error;
};

class StabilityError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class GuardExceeded : public Error {
public:
    using Error::Error;
};

// A computed polynomial failed the structural invariant suite.
class InvariantFailure : public Error {
public:
    using Error::Error;
};

class InconsistentOrbit : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace rgrec
