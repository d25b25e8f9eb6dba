// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0

#include "gsa/sobol_indices.hpp"

#include <algorithm>
#include <string>

#include "gsa/distributions.hpp"
#include "gsa/errors.hpp"

namespace gsa {

namespace {

std::string subset_string(std::span<const std::size_t> subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

const std::vector<double>& require_mix(const EvaluatedDesign& ev,
                                       std::span<const std::size_t> subset) {
    const std::vector<double>* y = ev.mix(subset);
    if (y == nullptr) {
        throw DesignIncompleteError("design has no mix for column subset " +
                                    subset_string(subset));
    }
    return *y;
}

const std::vector<double>& require_single_mix(const EvaluatedDesign& ev,
                                              std::size_t i) {
    const std::size_t subset[1] = {i};
    return require_mix(ev, subset);
}

double checked_variance(const EvaluatedDesign& ev) {
    const double v = design_variance(ev);
    if (v <= 0.0) {
        throw DegenerateOutputError(
            "output variance is zero; sensitivity indices are undefined");
    }
    return v;
}

// The shared numerator form of the first-order / closed-index estimator:
// (1/N) sum y_B (y_mix - y_A).
double pick_freeze_numerator(const EvaluatedDesign& ev,
                             const std::vector<double>& y_mix) {
    if (!ev.has_mirror()) {
        throw DesignIncompleteError(
            "first-order/closed estimates need mirror-matrix outputs");
    }
    const std::size_t n = ev.y_base.size();
    double acc = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        acc += ev.y_mirror[v] * (y_mix[v] - ev.y_base[v]);
    }
    return acc / static_cast<double>(n);
}

}  // namespace

TotalOrderEstimator total_order_estimator_from_tag(int tag) {
    switch (tag) {
        case 1: return TotalOrderEstimator::Jansen;
        case 2: return TotalOrderEstimator::HommaSaltelli;
        case 3: return TotalOrderEstimator::Sobol2007;
    }
    throw ConfigError(
        "total-order estimator tag must be 1 (Jansen), 2 (Homma-Saltelli), or "
        "3 (Sobol 2007), got " + std::to_string(tag));
}

const std::vector<double>* EvaluatedDesign::mix(
    std::span<const std::size_t> subset) const {
    for (const MixOutputs& m : y_mix) {
        if (m.subset.size() == subset.size() &&
            std::equal(m.subset.begin(), m.subset.end(), subset.begin())) {
            return &m.y;
        }
    }
    return nullptr;
}

EvaluatedDesign evaluate_design(const EstimatorDesign& design,
                                const FunctionSpec& fn, bool evaluate_mirror) {
    const bool with_dummy = design.k() == fn.k + 1;
    if (!with_dummy && design.k() != fn.k) {
        throw ShapeError("design has " + std::to_string(design.k()) +
                         " columns; " + std::string(fn.name_string()) +
                         " needs " + std::to_string(fn.k) + " (or +1 dummy)");
    }
    const std::vector<DistributionSpec> specs = fn.input_specs(with_dummy);

    EvaluatedDesign ev;
    ev.k = design.k();
    ev.y_base = eval_rows(fn, transform(design.base, specs));
    if (evaluate_mirror) {
        ev.y_mirror = eval_rows(fn, transform(design.mirror, specs));
    }
    ev.y_mix.reserve(design.mixes.size());
    for (const EstimatorDesign::Mix& mix : design.mixes) {
        ev.y_mix.push_back(
            {mix.subset, eval_rows(fn, transform(mix.sample, specs))});
    }
    return ev;
}

double design_mean(const EvaluatedDesign& ev) {
    if (ev.y_base.empty()) throw EmptySampleError("design has no base outputs");
    double s = 0.0;
    for (double y : ev.y_base) s += y;
    for (double y : ev.y_mirror) s += y;
    return s / static_cast<double>(ev.y_base.size() + ev.y_mirror.size());
}

double design_variance(const EvaluatedDesign& ev) {
    const double m = design_mean(ev);
    double s = 0.0;
    for (double y : ev.y_base) s += (y - m) * (y - m);
    for (double y : ev.y_mirror) s += (y - m) * (y - m);
    return s / static_cast<double>(ev.y_base.size() + ev.y_mirror.size());
}

double first_order(const EvaluatedDesign& ev, std::size_t i) {
    const std::vector<double>& y_mix = require_single_mix(ev, i);
    return pick_freeze_numerator(ev, y_mix) / checked_variance(ev);
}

double total_order(const EvaluatedDesign& ev, std::size_t i,
                   TotalOrderEstimator estimator) {
    const std::vector<double>& y_mix = require_single_mix(ev, i);
    const double variance = checked_variance(ev);
    const std::size_t n = ev.y_base.size();
    switch (estimator) {
        case TotalOrderEstimator::Jansen: {
            double acc = 0.0;
            for (std::size_t v = 0; v < n; ++v) {
                const double d = ev.y_base[v] - y_mix[v];
                acc += d * d;
            }
            return acc / (2.0 * static_cast<double>(n)) / variance;
        }
        case TotalOrderEstimator::HommaSaltelli: {
            const double f0 = design_mean(ev);
            double acc = 0.0;
            for (std::size_t v = 0; v < n; ++v) acc += ev.y_base[v] * y_mix[v];
            return 1.0 - (acc / static_cast<double>(n) - f0 * f0) / variance;
        }
        case TotalOrderEstimator::Sobol2007: {
            double acc = 0.0;
            for (std::size_t v = 0; v < n; ++v) {
                acc += ev.y_base[v] * (ev.y_base[v] - y_mix[v]);
            }
            return acc / static_cast<double>(n) / variance;
        }
    }
    throw ConfigError("unknown total-order estimator");
}

double closed_index(const EvaluatedDesign& ev,
                    std::span<const std::size_t> subset) {
    const std::vector<double>& y_mix = require_mix(ev, subset);
    return pick_freeze_numerator(ev, y_mix) / checked_variance(ev);
}

std::vector<double> SobolEstimates::first_clamped() const {
    std::vector<double> out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = clamp01(first[i]);
    return out;
}

std::vector<double> SobolEstimates::total_clamped() const {
    std::vector<double> out(total.size());
    for (std::size_t i = 0; i < total.size(); ++i) out[i] = clamp01(total[i]);
    return out;
}

SobolEstimates interaction_indices(const EvaluatedDesign& ev,
                                   TotalOrderEstimator estimator,
                                   int max_order) {
    if (max_order < 1 || max_order > 3 ||
        static_cast<std::size_t>(max_order) > ev.k) {
        throw InvalidOrderError("interaction order " + std::to_string(max_order) +
                                " invalid for k=" + std::to_string(ev.k));
    }
    SobolEstimates est;
    est.estimator_tag = estimator;
    est.mean = design_mean(ev);
    est.variance = checked_variance(ev);

    const std::size_t k = ev.k;
    est.first.resize(k);
    est.total.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        est.first[i] = first_order(ev, i);
        est.total[i] = total_order(ev, i, estimator);
    }
    if (max_order >= 2) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                const std::size_t subset[2] = {i, j};
                est.second[{i, j}] =
                    closed_index(ev, subset) - est.first[i] - est.first[j];
            }
        }
    }
    if (max_order >= 3) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                for (std::size_t l = j + 1; l < k; ++l) {
                    const std::size_t subset[3] = {i, j, l};
                    est.third[{i, j, l}] =
                        closed_index(ev, subset) - est.second.at({i, j}) -
                        est.second.at({i, l}) - est.second.at({j, l}) -
                        est.first[i] - est.first[j] - est.first[l];
                }
            }
        }
    }
    return est;
}

double clamp01(double value) { return std::max(0.0, std::min(1.0, value)); }

}  // namespace gsa
