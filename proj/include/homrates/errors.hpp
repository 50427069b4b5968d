#pragma once

#include <stdexcept>
#include <string>

namespace homrates {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad constructor/function arguments (negative occupations, eta outside (0,1], ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// A requested computation would exceed a configured resource bound
// (truncation order cap, state term budget).
class CapacityError : public Error {
public:
    using Error::Error;
};

// A ratio or visibility whose denominator vanishes (vacuum-only state, Gamma=0).
class UndefinedValueError : public Error {
public:
    explicit UndefinedValueError(const std::string& what, double denominator)
        : Error(what), denominator_(denominator) {}
    double denominator() const { return denominator_; }

private:
    double denominator_ = 0.0;
};

}  // namespace homrates
