// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

// Maximum supported dimensionality of the low-discrepancy generator.
inline constexpr std::size_t kMaxSobolDimension = 64;

// Streaming generator for the Sobol' low-discrepancy sequence.
//
// Points are produced in Gray-code order with 32 bits of precision per
// coordinate: point 0 is the origin, and successive points flip exactly one
// direction number. The direction numbers follow the primitive-polynomial
// initialisation of Joe and Kuo for dimensions up to kMaxSobolDimension.
class SobolSequence {
public:
    // Throws UnsupportedDimensionError unless 1 <= dimension <= 64.
    explicit SobolSequence(std::size_t dimension);

    std::size_t dimension() const { return dimension_; }

    // Index of the point the next call to next() will return.
    std::uint64_t position() const { return index_; }

    // Advances the stream so the next point returned is point `index` of the
    // sequence (point 0 is the origin). Uses the Gray-code fast-forward, so
    // the cost is O(dimension * 32) regardless of the target index.
    void seek(std::uint64_t index);

    // Writes the next point into out[0..dimension). All coordinates lie in
    // [0, 1); coordinate values are odd multiples of 2^-k for some k <= 32,
    // except at the origin.
    void next(double* out);

    // Convenience: the next point as a vector.
    std::vector<double> next();

private:
    std::size_t dimension_;
    std::uint64_t index_ = 0;                // index of the next point
    std::vector<std::uint32_t> state_;       // current integer coordinates
    std::vector<std::uint32_t> directions_;  // 32 direction values per dim
};

// Generates `count` consecutive points of the `dimension`-dimensional
// sequence starting at point `skip` as the rows of a matrix.
//
// The default skip of 1 drops the all-zeros origin, which is never a useful
// sample point. Throws UnsupportedDimensionError for dimension 0 or > 64 and
// EmptySampleError for count == 0.
Matrix sobol_sequence(std::size_t dimension, std::size_t count,
                      std::uint64_t skip = 1);

}  // namespace gsa
