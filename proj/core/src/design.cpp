// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0

#include "gsa/design.hpp"

#include <string>

#include "gsa/errors.hpp"
#include "gsa/sobol_sequence.hpp"

namespace gsa {

namespace {

// Appends every ascending `size`-subset of {0..k-1} in lexicographic order.
void append_subsets(std::size_t k, std::size_t size,
                    std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> subset(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i;
    while (true) {
        out.push_back(subset);
        // Advance to the next combination.
        std::size_t pos = size;
        while (pos > 0 && subset[pos - 1] == k - size + (pos - 1)) --pos;
        if (pos == 0) break;
        ++subset[pos - 1];
        for (std::size_t i = pos; i < size; ++i) subset[i] = subset[i - 1] + 1;
    }
}

}  // namespace

EstimatorDesign build_estimator_design(std::size_t base_size, std::size_t k,
                                       int max_subset_order,
                                       std::uint64_t seq_offset) {
    if (k < 1) throw ConfigError("estimator design requires k >= 1");
    return build_estimator_design(sobol_sequence(2 * k, base_size, seq_offset),
                                  k, max_subset_order);
}

EstimatorDesign build_estimator_design(const Matrix& joint, std::size_t k,
                                       int max_subset_order) {
    if (k < 1) throw ConfigError("estimator design requires k >= 1");
    if (joint.cols() != 2 * k) {
        throw ShapeError("estimator design needs a (rows, 2k) unit draw; got " +
                         std::to_string(joint.cols()) + " columns for k=" +
                         std::to_string(k));
    }
    const std::size_t base_size = joint.rows();
    if (base_size < 2) throw ConfigError("estimator design requires base_size >= 2");
    if (max_subset_order < 1 || max_subset_order > 3 ||
        static_cast<std::size_t>(max_subset_order) > k) {
        throw InvalidOrderError("subset order " + std::to_string(max_subset_order) +
                                " invalid for k=" + std::to_string(k) +
                                " (must be in [1, min(3, k)])");
    }

    EstimatorDesign design;
    design.base = Matrix(base_size, k);
    design.mirror = Matrix(base_size, k);
    for (std::size_t i = 0; i < base_size; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            design.base(i, j) = joint(i, j);
            design.mirror(i, j) = joint(i, k + j);
        }
    }

    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t size = 1; size <= static_cast<std::size_t>(max_subset_order);
         ++size) {
        append_subsets(k, size, subsets);
    }

    design.mixes.reserve(subsets.size());
    for (auto& subset : subsets) {
        EstimatorDesign::Mix mix;
        mix.sample = design.base;
        for (std::size_t col : subset) {
            mix.sample.copy_column_from(design.mirror, col, col);
        }
        mix.subset = std::move(subset);
        design.mixes.push_back(std::move(mix));
    }
    return design;
}

}  // namespace gsa
