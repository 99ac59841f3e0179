// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_ERRORS_HPP
#define MAXSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxspace {

/// Base class for all maxspace errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fewer than 3 distinct points, or all points collinear.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Dimension outside the supported range (d >= 1).
class InvalidDimension : public Error {
public:
    using Error::Error;
};

/// Parameter outside its stated range (n, gamma, alpha, ...).
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// An operation that requires at least one point received none.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// A sample point lies outside the region it must be contained in.
class PointOutsideRegion : public Error {
public:
    using Error::Error;
};

/// The density estimate does not cover the requested hull.
class DensityDomainMismatch : public Error {
public:
    using Error::Error;
};

/// Non-positive bandwidth.
class InvalidBandwidth : public Error {
public:
    using Error::Error;
};

/// All points identical; no scale to derive a bandwidth from.
class ZeroSpread : public Error {
public:
    using Error::Error;
};

/// Shape parameters outside their admissible range.
class InvalidShape : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `line` is 1-based, 0 when not line-specific.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line = 0) : Error(what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

} // namespace maxspace

#endif
