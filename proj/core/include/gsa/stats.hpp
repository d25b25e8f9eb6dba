// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "gsa/errors.hpp"

namespace gsa {

inline double mean(std::span<const double> v) {
    if (v.empty()) throw EmptySampleError("mean of empty sample");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Population variance (divides by the count, not count - 1).
inline double population_variance(std::span<const double> v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size());
}

// Sample standard deviation (divides by count - 1), as used by the
// kernel-bandwidth rule.
inline double sample_stddev(std::span<const double> v) {
    if (v.size() < 2) throw InsufficientSampleError("stddev needs >= 2 points");
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// Linear-interpolation quantile (the "type 7" convention: h = (m-1)p) over a
// sorted vector.
inline double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw EmptySampleError("quantile of empty sample");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

// Quantile of an unsorted sample (copies and sorts).
inline double quantile(std::span<const double> v, double p) {
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    return quantile_sorted(s, p);
}

inline double median(std::span<const double> v) { return quantile(v, 0.5); }

inline double interquartile_range(std::span<const double> v) {
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    return quantile_sorted(s, 0.75) - quantile_sorted(s, 0.25);
}

}  // namespace gsa
