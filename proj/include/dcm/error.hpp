#pragma once

#include <stdexcept>
#include <string>

namespace dcm {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the range an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operands belong to different fields, or matrix shapes do not agree.
class MismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// An enumeration would stream more elements than the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An exact rational computation that must produce an integer did not.
class IntegralityError : public Error {
public:
    using Error::Error;
};

}  // namespace dcm
