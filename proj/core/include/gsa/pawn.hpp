// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

// Reduction applied to the per-interval KS values. Serialized as integers
// 1/2/3 in configs and CSV output.
enum class SummaryStatistic { Mean = 1, Median = 2, Max = 3 };

SummaryStatistic summary_statistic_from_tag(int tag);

struct PawnConfig {
    std::size_t n = 10;                                   // conditioning intervals
    SummaryStatistic theta = SummaryStatistic::Mean;
    std::uint64_t seed = 0;                               // the epsilon parameter
    // Test hook: when false, the unconditional sample is the first
    // floor(N/n) outputs in row order instead of a seeded subsample, making
    // results independent of `seed` by construction.
    bool seeded_subsample = true;
};

// Equal-frequency partition of the sample rows by one input's value.
struct ConditioningSplit {
    std::size_t input_index = 0;
    std::vector<std::size_t> sorted_rows;  // all rows, ascending input value
    // Half-open [begin, end) ranges into sorted_rows, one per group; sizes
    // differ by at most one, earlier groups take the remainder.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
};

struct PawnIndexVector {
    std::vector<double> values;  // one per input column, each in [0, 1]
    PawnConfig config;
    std::size_t sample_size = 0;  // N
};

// Exact two-sample Kolmogorov-Smirnov statistic: the supremum of the
// absolute ECDF difference, evaluated at the merged sample points.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

// Sorts row indices by the column value (stable, so ties keep row order)
// and cuts them into n contiguous equal-frequency groups. Requires
// 2 <= n <= N/2 so every group holds at least 2 points.
ConditioningSplit split_conditional(std::span<const double> input_column,
                                    std::size_t n, std::size_t input_index = 0);

// Draws `size` elements of y without replacement via a seeded partial
// Fisher-Yates shuffle of the positions 0..len-1. Deterministic in
// (y, size, seed).
std::vector<double> subsample_unconditional(std::span<const double> y,
                                            std::size_t size, std::uint64_t seed);

// Reduces KS values by the summary statistic. Median of an even count is
// the mean of the two central order statistics.
double summarize(std::span<const double> ks_values, SummaryStatistic theta);

// The PAWN index of every input column: split each column into config.n
// equal-frequency groups, compare each group's outputs against one
// unconditional subsample of size floor(N/n) (seeded per input from
// config.seed), and reduce the n KS values by config.theta.
//
// The unconditional subsample is drawn over the split-sorted row order, so
// jointly permuting the rows of (inputs, y) leaves the result unchanged.
PawnIndexVector pawn_indices(const Matrix& inputs, std::span<const double> y,
                             const PawnConfig& config);

}  // namespace gsa
