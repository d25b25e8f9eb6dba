// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0

#include "gsa/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsa/errors.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;  // 1/sqrt(2*pi)

void check_kde_sample(std::span<const double> sample) {
    if (sample.size() < 10) {
        throw InsufficientSampleError("density estimation needs >= 10 points, got " +
                                      std::to_string(sample.size()));
    }
    for (double x : sample) {
        if (!std::isfinite(x)) {
            throw InvalidDataError("density sample contains a non-finite value");
        }
    }
}

bool is_constant(std::span<const double> sample) {
    for (double x : sample) {
        if (x != sample.front()) return false;
    }
    return true;
}

// Silverman's rule with a fallback to the plain standard deviation when the
// interquartile range collapses (heavily tied samples).
double silverman_bandwidth(std::span<const double> sample) {
    // A literally constant sample must be rejected here rather than via the
    // variance, whose accumulation noise can make it spuriously positive.
    if (is_constant(sample)) {
        throw DegenerateSampleError(
            "sample has zero spread; density estimate undefined");
    }
    const double sd = sample_stddev(sample);
    const double iqr_term = interquartile_range(sample) / 1.34;
    double scale = std::min(sd, iqr_term);
    if (scale <= 0.0) scale = sd;
    if (scale <= 0.0) {
        throw DegenerateSampleError(
            "sample has zero spread; density estimate undefined");
    }
    return 0.9 * scale * std::pow(static_cast<double>(sample.size()), -0.2);
}

// Sum of Gaussian kernels at each grid point. The sample is sorted so each
// grid point only visits values within 8 bandwidths (the kernel tail beyond
// that is below 1e-14 and cannot move the overlap at reporting precision).
void evaluate_density(const std::vector<double>& sorted_sample, double h,
                      std::span<const double> grid, std::span<double> out) {
    const double inv_h = 1.0 / h;
    const double norm =
        kInvSqrt2Pi * inv_h / static_cast<double>(sorted_sample.size());
    const double window = 8.0 * h;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const double t = grid[g];
        const auto lo = std::lower_bound(sorted_sample.begin(), sorted_sample.end(),
                                         t - window);
        const auto hi = std::upper_bound(lo, sorted_sample.end(), t + window);
        double acc = 0.0;
        for (auto it = lo; it != hi; ++it) {
            const double z = (t - *it) * inv_h;
            acc += std::exp(-0.5 * z * z);
        }
        out[g] = acc * norm;
    }
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
    std::vector<double> grid(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = lo + step * static_cast<double>(i);
    }
    grid.back() = hi;
    return grid;
}

double trapezoid(std::span<const double> grid, std::span<const double> f) {
    double acc = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        acc += 0.5 * (f[i - 1] + f[i]) * (grid[i] - grid[i - 1]);
    }
    return acc;
}

}  // namespace

DensityEstimate kde(std::span<const double> sample) {
    check_kde_sample(sample);
    const double h = silverman_bandwidth(sample);

    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());

    DensityEstimate est;
    est.bandwidth = h;
    est.grid = linear_grid(sorted.front() - 3.0 * h, sorted.back() + 3.0 * h,
                           kDensityGridSize);
    est.density.resize(kDensityGridSize);
    evaluate_density(sorted, h, est.grid, est.density);
    return est;
}

double coefficient_of_overlapping(std::span<const double> a,
                                  std::span<const double> b) {
    check_kde_sample(a);
    check_kde_sample(b);
    // Degenerate-pair convention: two point masses overlap fully when they
    // sit on the same value and not at all otherwise.
    const bool const_a = is_constant(a);
    const bool const_b = is_constant(b);
    if (const_a && const_b) return a.front() == b.front() ? 1.0 : 0.0;

    const double ha = silverman_bandwidth(a);
    const double hb = silverman_bandwidth(b);

    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    const double lo = std::min(sa.front() - 3.0 * ha, sb.front() - 3.0 * hb);
    const double hi = std::max(sa.back() + 3.0 * ha, sb.back() + 3.0 * hb);
    const std::vector<double> grid = linear_grid(lo, hi, kDensityGridSize);

    std::vector<double> fa(kDensityGridSize);
    std::vector<double> fb(kDensityGridSize);
    evaluate_density(sa, ha, grid, fa);
    evaluate_density(sb, hb, grid, fb);

    std::vector<double> fmin(kDensityGridSize);
    for (std::size_t i = 0; i < kDensityGridSize; ++i) {
        fmin[i] = std::min(fa[i], fb[i]);
    }
    const double raw = trapezoid(grid, fmin);
    if (raw < -0.02 || raw > 1.02) {
        throw NumericError("overlap integral " + std::to_string(raw) +
                           " outside the plausible range [-0.02, 1.02]");
    }
    return std::max(0.0, std::min(1.0, raw));
}

OverlapMatrix overlap_matrix(const std::vector<std::string>& labels,
                             const std::vector<std::vector<double>>& samples) {
    if (labels.size() != samples.size()) {
        throw ShapeError("overlap matrix: " + std::to_string(labels.size()) +
                         " labels for " + std::to_string(samples.size()) +
                         " samples");
    }
    if (labels.size() < 2) {
        throw InsufficientSampleError("overlap matrix needs >= 2 inputs");
    }
    const std::size_t m = labels.size();
    OverlapMatrix result;
    result.labels = labels;
    result.values = Matrix(m, m, 0.0);
    for (std::size_t i = 0; i < m; ++i) result.values(i, i) = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            double value = 0.0;
            const std::string pair = "overlap(" + labels[i] + ", " + labels[j] + "): ";
            try {
                value = coefficient_of_overlapping(samples[i], samples[j]);
            } catch (const DegenerateSampleError& e) {
                throw DegenerateSampleError(pair + e.what());
            } catch (const NumericError& e) {
                throw NumericError(pair + e.what());
            } catch (const InsufficientSampleError& e) {
                throw InsufficientSampleError(pair + e.what());
            } catch (const InvalidDataError& e) {
                throw InvalidDataError(pair + e.what());
            }
            result.values(i, j) = value;
            result.values(j, i) = value;
        }
    }
    return result;
}

}  // namespace gsa
