// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

// Fixed evaluation-grid size for density estimates and overlap integrals.
inline constexpr std::size_t kDensityGridSize = 1024;

struct DensityEstimate {
    std::vector<double> grid;     // strictly increasing, kDensityGridSize points
    std::vector<double> density;  // same length, non-negative
    double bandwidth = 0.0;
};

// Gaussian kernel density estimate with the Silverman bandwidth
// 0.9 * min(sd, IQR/1.34) * m^(-1/5) over a 1024-point grid spanning
// [min - 3h, max + 3h]. When the IQR collapses to zero (heavily tied
// samples) the rule falls back to the standard deviation alone; an all-equal
// sample raises DegenerateSampleError. Requires at least 10 points.
DensityEstimate kde(std::span<const double> sample);

// Coefficient of overlapping: the integral of min(density_a, density_b) on a
// shared 1024-point grid spanning the union of both KDE grids, clamped to
// [0, 1]. A pre-clamp value outside [-0.02, 1.02] raises NumericError.
// Two all-equal samples with the same constant value return 1 by convention
// (0 when the constants differ).
double coefficient_of_overlapping(std::span<const double> a,
                                  std::span<const double> b);

struct OverlapMatrix {
    std::vector<std::string> labels;
    Matrix values;  // symmetric, unit diagonal, entries in [0, 1]

    double at(std::size_t i, std::size_t j) const { return values(i, j); }
};

// All pairwise coefficients between the labelled samples; each unordered
// pair computed once. Pairwise errors are rethrown with the pair's labels
// attached. Requires >= 2 inputs.
OverlapMatrix overlap_matrix(const std::vector<std::string>& labels,
                             const std::vector<std::vector<double>>& samples);

}  // namespace gsa
