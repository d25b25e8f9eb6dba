// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

// The stacked matrix design used by pick-and-freeze variance estimators:
// paired sample matrices A and B plus "mix" matrices that equal A with a
// chosen subset of columns replaced by B's.
struct EstimatorDesign {
    Matrix base;    // A: shape (base_size, k), entries in [0, 1)
    Matrix mirror;  // B: same shape

    struct Mix {
        std::vector<std::size_t> subset;  // 0-based column indices, ascending
        Matrix sample;                    // A with subset columns from B
    };
    std::vector<Mix> mixes;  // size-1 subsets first, then 2, then 3

    std::size_t base_size() const { return base.rows(); }
    std::size_t k() const { return base.cols(); }
};

// Draws one Sobol' sample of shape (base_size, 2k) starting at sequence
// point `seq_offset`, splits it into A (first k columns) and B (last k), and
// builds mixes for every column subset of size <= max_subset_order
// (lexicographic order within each size).
//
// Throws InvalidOrderError when max_subset_order is outside [1, 3] or
// exceeds k, and UnsupportedDimensionError when 2k exceeds the sequence
// dimension limit.
EstimatorDesign build_estimator_design(std::size_t base_size, std::size_t k,
                                       int max_subset_order,
                                       std::uint64_t seq_offset);

// Same construction from a caller-supplied (base_size, 2k) unit draw, for
// designs whose points come from another deterministic stream. Throws
// ShapeError when the draw does not have exactly 2k columns.
EstimatorDesign build_estimator_design(const Matrix& joint, std::size_t k,
                                       int max_subset_order);

}  // namespace gsa
