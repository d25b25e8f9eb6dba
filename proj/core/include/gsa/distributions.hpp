// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

// Marginal input distribution: one of the three families used by the
// benchmark functions and the design-parameter experiment.
struct DistributionSpec {
    enum class Kind { ContinuousUniform, DiscreteUniform, ChiSquare };

    Kind kind;
    // ContinuousUniform: p1 = a, p2 = b (a < b).
    // DiscreteUniform:   p1 = lo, p2 = hi (integers, lo <= hi).
    // ChiSquare:         p1 = df (> 0, possibly non-integer), p2 unused.
    double p1 = 0.0;
    double p2 = 0.0;

    static DistributionSpec continuous_uniform(double a, double b);
    static DistributionSpec discrete_uniform(double lo, double hi);
    static DistributionSpec chi_square(double df);

    // Inverse CDF at u in [0, 1). Monotone non-decreasing in u.
    double quantile(double u) const;
};

// Maps column j of `sample` through specs[j].quantile. Throws ShapeError when
// specs.size() does not match the column count.
Matrix transform(const Matrix& sample, const std::vector<DistributionSpec>& specs);

// Regularized lower incomplete gamma function P(a, x) for a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

// Smallest x with |P(a, x) - p| <= 1e-10, found by a guarded Newton
// iteration from the Wilson-Hilferty starting point. Throws NumericError if
// the iteration fails to converge within 200 steps or p is outside [0, 1).
double inverse_regularized_gamma_p(double a, double p);

// Quantile of the chi-square distribution with df degrees of freedom
// (df > 0, non-integer allowed): 2 * inverse_regularized_gamma_p(df/2, p).
double chi_square_quantile(double df, double p);

}  // namespace gsa
