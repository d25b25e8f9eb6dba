// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gsa {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix/vector arguments whose shapes do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

// An input value lies outside the domain a function is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

// An operation received an empty sample where at least one point is needed.
class EmptySampleError : public Error {
public:
    using Error::Error;
};

// Requested dimensionality exceeds the embedded direction-number table.
class UnsupportedDimensionError : public Error {
public:
    using Error::Error;
};

// Requested interaction order cannot be formed for the given dimension.
class InvalidOrderError : public Error {
public:
    using Error::Error;
};

// Too few sample points for the requested split or subsample.
class InsufficientSampleError : public Error {
public:
    using Error::Error;
};

// NaN or other unusable values found in the data.
class InvalidDataError : public Error {
public:
    using Error::Error;
};

// A sample with no spread where a density or variance is required.
class DegenerateSampleError : public Error {
public:
    using Error::Error;
};

// Model output variance is zero; variance-based indices are undefined.
class DegenerateOutputError : public Error {
public:
    using Error::Error;
};

// The evaluated design lacks a matrix needed by the requested estimator.
class DesignIncompleteError : public Error {
public:
    using Error::Error;
};

// A numerical routine failed to converge or produced an invalid value.
class NumericError : public Error {
public:
    using Error::Error;
};

// Invalid run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace gsa
