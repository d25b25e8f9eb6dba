// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0

#include "gsa/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gsa/errors.hpp"

namespace gsa {

namespace {

constexpr double kCdfTolerance = 1e-10;
constexpr int kMaxInversionSteps = 200;

// Lower incomplete gamma by its power series, valid and fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma Q(a, x) by the Lentz continued fraction, for
// x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Inverse standard-normal CDF (Acklam's rational approximation). Only used
// to seed the Newton iteration, so ~1e-9 relative accuracy is ample.
double normal_quantile(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

DistributionSpec DistributionSpec::continuous_uniform(double a, double b) {
    if (!(a < b)) {
        throw ConfigError("continuous uniform requires a < b, got [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return {Kind::ContinuousUniform, a, b};
}

DistributionSpec DistributionSpec::discrete_uniform(double lo, double hi) {
    if (!(lo <= hi) || lo != std::floor(lo) || hi != std::floor(hi)) {
        throw ConfigError("discrete uniform requires integer lo <= hi, got [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return {Kind::DiscreteUniform, lo, hi};
}

DistributionSpec DistributionSpec::chi_square(double df) {
    if (!(df > 0.0)) {
        throw ConfigError("chi-square requires df > 0, got " + std::to_string(df));
    }
    return {Kind::ChiSquare, df};
}

double DistributionSpec::quantile(double u) const {
    switch (kind) {
        case Kind::ContinuousUniform:
            return p1 + u * (p2 - p1);
        case Kind::DiscreteUniform: {
            const double span = p2 - p1 + 1.0;
            double v = std::floor(p1 + u * span);
            if (v > p2) v = p2;  // guards u == 1 - ulp edge growth
            return v;
        }
        case Kind::ChiSquare:
            return chi_square_quantile(p1, u);
    }
    throw ConfigError("unknown distribution kind");
}

Matrix transform(const Matrix& sample, const std::vector<DistributionSpec>& specs) {
    if (specs.size() != sample.cols()) {
        throw ShapeError("transform: " + std::to_string(specs.size()) +
                         " distribution specs for " + std::to_string(sample.cols()) +
                         " sample columns");
    }
    Matrix out(sample.rows(), sample.cols());
    for (std::size_t j = 0; j < sample.cols(); ++j) {
        const DistributionSpec& spec = specs[j];
        for (std::size_t i = 0; i < sample.rows(); ++i) {
            out(i, j) = spec.quantile(sample(i, j));
        }
    }
    return out;
}

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw NumericError("incomplete gamma requires shape > 0");
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_continued_fraction(a, x);
}

double inverse_regularized_gamma_p(double a, double p) {
    if (!(a > 0.0)) throw NumericError("incomplete gamma requires shape > 0");
    if (p < 0.0 || p >= 1.0) {
        throw NumericError("inverse incomplete gamma: p=" + std::to_string(p) +
                           " outside [0, 1) for shape " + std::to_string(a));
    }
    if (p == 0.0) return 0.0;

    // Wilson-Hilferty starting point, clipped away from zero.
    const double z = normal_quantile(p);
    const double wh = 1.0 - 1.0 / (9.0 * a) + z * std::sqrt(1.0 / (9.0 * a));
    double x = a * wh * wh * wh;
    if (!(x > 0.0) || !std::isfinite(x)) x = a * 0.5;

    // Newton on F(x) = P(a, x) - p with a shrinking bisection bracket.
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (int step = 0; step < kMaxInversionSteps; ++step) {
        const double f = regularized_gamma_p(a, x) - p;
        if (std::fabs(f) <= kCdfTolerance) return x;
        if (f > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        // Density of the gamma(a, 1) distribution at x.
        const double pdf = std::exp((a - 1.0) * std::log(x) - x - std::lgamma(a));
        double next = (pdf > 0.0) ? x - f / pdf : -1.0;
        if (!(next > lo) || !(next < hi) || !std::isfinite(next)) {
            next = std::isfinite(hi) ? 0.5 * (lo + hi) : x * 2.0;
        }
        x = next;
    }
    throw NumericError("inverse incomplete gamma did not converge: p=" +
                       std::to_string(p) + ", shape=" + std::to_string(a));
}

double chi_square_quantile(double df, double p) {
    return 2.0 * inverse_regularized_gamma_p(0.5 * df, p);
}

}  // namespace gsa
