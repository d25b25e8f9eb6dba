// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0

#include "gsa/sobol_sequence.hpp"

#include <bit>
#include <string>

#include "gsa/errors.hpp"

namespace gsa {

namespace detail {
void sobol_fill_directions(std::size_t coord, std::uint32_t* v);
}  // namespace detail

namespace {
constexpr double kScale = 1.0 / 4294967296.0;  // 2^-32

// Index of the lowest zero bit of n (the direction used to step from Gray
// code n to Gray code n+1).
inline int lowest_zero_bit(std::uint64_t n) {
    return std::countr_zero(~n);
}
}  // namespace

SobolSequence::SobolSequence(std::size_t dimension) : dimension_(dimension) {
    if (dimension < 1 || dimension > kMaxSobolDimension) {
        throw UnsupportedDimensionError(
            "sobol sequence dimension must be in [1, " +
            std::to_string(kMaxSobolDimension) + "], got " +
            std::to_string(dimension));
    }
    state_.assign(dimension, 0u);
    directions_.resize(dimension * 32);
    for (std::size_t j = 0; j < dimension; ++j) {
        detail::sobol_fill_directions(j, directions_.data() + j * 32);
    }
}

void SobolSequence::seek(std::uint64_t index) {
    // Point i in Gray-code order equals XOR of V[c] over the set bits of
    // gray(i) = i ^ (i >> 1).
    const std::uint64_t gray = index ^ (index >> 1);
    for (std::size_t j = 0; j < dimension_; ++j) {
        const std::uint32_t* v = directions_.data() + j * 32;
        std::uint32_t x = 0;
        for (int c = 0; c < 32; ++c) {
            if ((gray >> c) & 1u) x ^= v[c];
        }
        state_[j] = x;
    }
    index_ = index;
}

void SobolSequence::next(double* out) {
    for (std::size_t j = 0; j < dimension_; ++j) {
        out[j] = state_[j] * kScale;
    }
    // Advance to the next point: flip the direction picked by the Gray code.
    const int c = lowest_zero_bit(index_);
    for (std::size_t j = 0; j < dimension_; ++j) {
        state_[j] ^= directions_[j * 32 + c];
    }
    ++index_;
}

std::vector<double> SobolSequence::next() {
    std::vector<double> point(dimension_);
    next(point.data());
    return point;
}

Matrix sobol_sequence(std::size_t dimension, std::size_t count,
                      std::uint64_t skip) {
    if (count == 0) {
        throw EmptySampleError("sobol sample must contain at least one point");
    }
    SobolSequence seq(dimension);
    seq.seek(skip);
    Matrix points(count, dimension);
    for (std::size_t i = 0; i < count; ++i) {
        seq.next(&points(i, 0));
    }
    return points;
}

}  // namespace gsa
