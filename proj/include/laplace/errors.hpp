#pragma once

#include <stdexcept>
#include <string>

namespace laplace {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Grid sizing violations: non-divisible domain lengths, grids too small,
/// non-coarsenable dimensions.
class SizingError : public Error {
public:
    explicit SizingError(const std::string& what) : Error(what) {}
};

/// Malformed problem/field files (bad syntax, dimension mismatch, non-finite values).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Zero or near-zero pivot encountered while factoring a linear system.
class SingularSystemError : public Error {
public:
    explicit SingularSystemError(const std::string& what) : Error(what) {}
};

} // namespace laplace
