// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0

#include "gsa/pawn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gsa/errors.hpp"
#include "gsa/seeding.hpp"

namespace gsa {

namespace {

void check_finite(std::span<const double> v, const char* what) {
    for (double x : v) {
        if (std::isnan(x)) {
            throw InvalidDataError(std::string(what) + " contains NaN");
        }
    }
}

}  // namespace

SummaryStatistic summary_statistic_from_tag(int tag) {
    switch (tag) {
        case 1: return SummaryStatistic::Mean;
        case 2: return SummaryStatistic::Median;
        case 3: return SummaryStatistic::Max;
    }
    throw ConfigError("summary statistic tag must be 1 (mean), 2 (median), or 3 (max), got " +
                      std::to_string(tag));
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw EmptySampleError("KS statistic requires two non-empty samples");
    }
    check_finite(a, "KS sample a");
    check_finite(b, "KS sample b");

    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t ia = 0, ib = 0;
    double d = 0.0;
    // Walk the merged order; at each distinct merged value t, advance both
    // ECDFs past every point <= t, then compare. Once one sample is
    // exhausted the gap can only shrink, so the loop may stop.
    while (ia < sa.size() && ib < sb.size()) {
        const double t = std::min(sa[ia], sb[ib]);
        while (ia < sa.size() && sa[ia] <= t) ++ia;
        while (ib < sb.size() && sb[ib] <= t) ++ib;
        d = std::max(d, std::fabs(static_cast<double>(ia) / na -
                                  static_cast<double>(ib) / nb));
    }
    return d;
}

ConditioningSplit split_conditional(std::span<const double> input_column,
                                    std::size_t n, std::size_t input_index) {
    const std::size_t N = input_column.size();
    if (n < 2) {
        throw ConfigError("conditioning requires n >= 2 intervals, got " +
                          std::to_string(n));
    }
    if (n > N / 2) {
        throw InsufficientSampleError(
            "cannot split " + std::to_string(N) + " rows into " + std::to_string(n) +
            " groups of >= 2 points");
    }
    check_finite(input_column, "conditioning column");

    ConditioningSplit split;
    split.input_index = input_index;
    split.sorted_rows.resize(N);
    std::iota(split.sorted_rows.begin(), split.sorted_rows.end(), std::size_t{0});
    std::stable_sort(split.sorted_rows.begin(), split.sorted_rows.end(),
                     [&](std::size_t lhs, std::size_t rhs) {
                         return input_column[lhs] < input_column[rhs];
                     });

    const std::size_t base = N / n;
    const std::size_t remainder = N % n;
    split.groups.reserve(n);
    std::size_t begin = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t size = base + (j < remainder ? 1 : 0);
        split.groups.emplace_back(begin, begin + size);
        begin += size;
    }
    return split;
}

std::vector<double> subsample_unconditional(std::span<const double> y,
                                            std::size_t size, std::uint64_t seed) {
    const std::size_t N = y.size();
    if (size < 1 || size > N) {
        throw InsufficientSampleError("subsample size " + std::to_string(size) +
                                      " invalid for sample of " + std::to_string(N));
    }
    std::vector<std::size_t> positions(N);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    SmallRng rng(seed);
    std::vector<double> out(size);
    for (std::size_t t = 0; t < size; ++t) {
        const std::size_t j = t + static_cast<std::size_t>(rng.next_below(N - t));
        std::swap(positions[t], positions[j]);
        out[t] = y[positions[t]];
    }
    return out;
}

double summarize(std::span<const double> ks_values, SummaryStatistic theta) {
    if (ks_values.empty()) throw EmptySampleError("no KS values to summarize");
    switch (theta) {
        case SummaryStatistic::Mean: {
            double s = 0.0;
            for (double v : ks_values) s += v;
            return s / static_cast<double>(ks_values.size());
        }
        case SummaryStatistic::Median: {
            std::vector<double> s(ks_values.begin(), ks_values.end());
            std::sort(s.begin(), s.end());
            const std::size_t m = s.size();
            return (m % 2 == 1) ? s[m / 2] : 0.5 * (s[m / 2 - 1] + s[m / 2]);
        }
        case SummaryStatistic::Max:
            return *std::max_element(ks_values.begin(), ks_values.end());
    }
    throw ConfigError("unknown summary statistic");
}

PawnIndexVector pawn_indices(const Matrix& inputs, std::span<const double> y,
                             const PawnConfig& config) {
    const std::size_t N = inputs.rows();
    if (N != y.size()) {
        throw ShapeError("pawn: " + std::to_string(N) + " input rows vs " +
                         std::to_string(y.size()) + " outputs");
    }
    check_finite(y, "pawn outputs");

    const std::size_t n_c = N / config.n;  // split_conditional validates n
    PawnIndexVector result;
    result.config = config;
    result.sample_size = N;
    result.values.resize(inputs.cols());

    std::vector<double> y_sorted(N);
    std::vector<double> ks_values(config.n);
    std::vector<double> group_buffer;
    for (std::size_t i = 0; i < inputs.cols(); ++i) {
        const ConditioningSplit split =
            split_conditional(inputs.column(i), config.n, i);
        for (std::size_t r = 0; r < N; ++r) y_sorted[r] = y[split.sorted_rows[r]];

        std::vector<double> y_u;
        if (config.seeded_subsample) {
            y_u = subsample_unconditional(y_sorted, n_c,
                                          derive_seed(config.seed, i));
        } else {
            y_u.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n_c));
        }

        for (std::size_t j = 0; j < config.n; ++j) {
            const auto [begin, end] = split.groups[j];
            group_buffer.assign(y_sorted.begin() + static_cast<std::ptrdiff_t>(begin),
                                y_sorted.begin() + static_cast<std::ptrdiff_t>(end));
            ks_values[j] = ks_two_sample(y_u, group_buffer);
        }
        result.values[i] = summarize(ks_values, config.theta);
    }
    return result;
}

}  // namespace gsa
