#pragma once

#include <stdexcept>
#include <string>

namespace blockmat {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-positive or non-conformable element dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Block-structure violations: inconsistent grids, incompatible partitions,
/// mixed scalar/block rows, unsatisfiable conformations.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// 1-based index outside the valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Exact division by zero.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Operation restricted to 1x1 and 2x2 block grids (or to square inputs)
/// was handed something else. Distinct from a singular-input FAIL, which is
/// reported through return values, never thrown.
class UnsupportedShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed scalar literal or matrix document.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace blockmat
