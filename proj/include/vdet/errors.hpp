#pragma once

#include <stdexcept>
#include <string>

namespace vdet {

/// Division by zero or a division that does not come out exact.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Index or shape violation on a matrix or polynomial.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A family descriptor that violates its parameter constraints.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation was refused because the matrix exceeds a configured size limit.
class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A reduction engine was asked to run outside generic position.
class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vdet
