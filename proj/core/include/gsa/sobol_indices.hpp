// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "gsa/design.hpp"
#include "gsa/test_functions.hpp"

namespace gsa {

// Total-order estimator choice. Serialized as integers 1/2/3 in configs and
// CSV output, mirroring the summary-statistic encoding.
enum class TotalOrderEstimator { Jansen = 1, HommaSaltelli = 2, Sobol2007 = 3 };

TotalOrderEstimator total_order_estimator_from_tag(int tag);

// Model outputs over an estimator design. y_mirror may be left empty when
// only total-order indices are needed (they use the base and mix outputs
// only), which keeps the run budget at base_size * (k + 1) evaluations.
struct EvaluatedDesign {
    std::size_t k = 0;
    std::vector<double> y_base;    // outputs on A
    std::vector<double> y_mirror;  // outputs on B; empty = not evaluated
    struct MixOutputs {
        std::vector<std::size_t> subset;
        std::vector<double> y;
    };
    std::vector<MixOutputs> y_mix;

    bool has_mirror() const { return !y_mirror.empty(); }
    // Outputs of the mix for `subset`, or null when absent.
    const std::vector<double>* mix(std::span<const std::size_t> subset) const;
};

// Transforms every matrix of the design through the function's input
// distributions (detecting an appended dummy column from the design width)
// and evaluates row-wise. Set evaluate_mirror = false for total-order-only
// budgets.
EvaluatedDesign evaluate_design(const EstimatorDesign& design,
                                const FunctionSpec& fn,
                                bool evaluate_mirror = true);

// Mean and population variance of the pooled outputs (base and mirror
// concatenated when the mirror is present, base alone otherwise).
double design_mean(const EvaluatedDesign& ev);
double design_variance(const EvaluatedDesign& ev);

// First-order index of input i: (1/N) sum y_B (y_mix{i} - y_A) / V_Y.
// Requires the mirror outputs and the size-1 mix for i.
double first_order(const EvaluatedDesign& ev, std::size_t i);

// Total-order index of input i by the chosen estimator:
//   Jansen:        (1/(2N)) sum (y_A - y_mix{i})^2 / V_Y
//   HommaSaltelli: 1 - ((1/N) sum y_A y_mix{i} - f0^2) / V_Y
//   Sobol2007:     (1/N) sum y_A (y_A - y_mix{i}) / V_Y
double total_order(const EvaluatedDesign& ev, std::size_t i,
                   TotalOrderEstimator estimator);

// Closed index of a subset u (|u| in {2, 3}): the first-order estimator form
// applied to the subset mix, estimating V(E(Y | X_u)) / V_Y.
double closed_index(const EvaluatedDesign& ev,
                    std::span<const std::size_t> subset);

// Raw sensitivity estimates plus pooled-output moments. Raw values may fall
// outside [0, 1]; *_clamped() gives the reporting view.
struct SobolEstimates {
    std::vector<double> first;  // S_i, raw
    std::vector<double> total;  // S_Ti, raw
    std::map<std::pair<std::size_t, std::size_t>, double> second;   // S_ij
    std::map<std::array<std::size_t, 3>, double> third;             // S_ijl
    double mean = 0.0;      // f0 over pooled outputs
    double variance = 0.0;  // V_Y over pooled outputs
    TotalOrderEstimator estimator_tag = TotalOrderEstimator::Jansen;

    std::vector<double> first_clamped() const;
    std::vector<double> total_clamped() const;
};

// Everything at once: first and total for every input; interaction indices
// by inclusion-exclusion from closed indices when max_order >= 2:
//   S_ij  = S^closed_ij  - S_i - S_j
//   S_ijl = S^closed_ijl - S_ij - S_il - S_jl - S_i - S_j - S_l
// Requires the mirror outputs and every mix of size <= max_order.
SobolEstimates interaction_indices(const EvaluatedDesign& ev,
                                   TotalOrderEstimator estimator,
                                   int max_order);

// Reporting clamp to [0, 1]; raw values are kept alongside wherever stored.
double clamp01(double value);

}  // namespace gsa
