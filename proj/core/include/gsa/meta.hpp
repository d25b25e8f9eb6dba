// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gsa/distributions.hpp"
#include "gsa/overlap.hpp"
#include "gsa/sobol_indices.hpp"
#include "gsa/test_functions.hpp"

namespace gsa {

// A named configuration of the design-parameter distributions for the
// meta-experiment ("how uncertain are the indices in their own settings").
struct Setting {
    enum class Name { MaxInTheta, MaxNotInTheta, Optimum, TotalOrderStar };

    Name name;
    // Design parameters in declaration order. PAWN settings: N, n, eps,
    // theta (k_meta = 4). The total-order setting: N, theta (k_meta = 2).
    std::vector<DistributionSpec> distributions;

    std::size_t k_meta() const { return distributions.size(); }
    bool is_pawn() const { return name != Name::TotalOrderStar; }
    std::string_view name_string() const;
    std::vector<std::string> parameter_labels() const;

    // Lookup by CLI name: "max_in_theta", "max_not_in_theta", "optimum",
    // "total_order_star". Throws ConfigError for unknown names.
    static const Setting& by_name(std::string_view name);
    static const std::vector<const Setting*>& all();
};

// One realization of the uncertain design parameters of an inner analysis.
// n and eps are meaningful for PAWN settings only and are 0 otherwise.
struct DesignPoint {
    long long N = 0;
    long long n = 0;
    long long eps = 0;
    int theta = 1;  // 1..3; summary statistic (PAWN) or estimator (total-order)
};

// Index values of one inner analysis: one entry per model input.
// For PAWN, values == raw_values (the index is in [0,1] by construction);
// for total-order runs, values holds the clamped view of raw_values.
struct MetaRow {
    DesignPoint point;
    std::vector<double> values;
    std::vector<double> raw_values;
};

struct MetaBlock {
    std::vector<std::size_t> subset;  // design-parameter columns taken from B
    std::vector<MetaRow> rows;        // one per meta design row
};

struct MetaResult {
    std::string setting;
    std::string function;
    std::vector<std::string> input_labels;  // model inputs (+ "dummy" if used)
    std::size_t rows = 0;                   // R: rows per block
    std::uint64_t global_seed = 0;
    int orders = 0;  // largest mix subset evaluated (0 = A/B blocks only)
    std::vector<MetaRow> a_rows;
    std::vector<MetaRow> b_rows;
    std::vector<MetaBlock> mix_blocks;

    // Pools the A-block and B-block values of one model input (2R numbers).
    std::vector<double> pooled_values(std::size_t input) const;
};

struct MetaConfig {
    std::string setting = "max_in_theta";
    std::string function = "ishigami";
    std::size_t rows = 1u << 10;
    std::uint64_t global_seed = 1;
    unsigned parallelism = 1;
    // Largest design-parameter subset mixed for the meta-level estimators:
    // 0 runs only the A and B blocks (enough for overlap diagnostics);
    // 1 adds the size-1 mixes needed by first/total meta indices;
    // 2 and 3 add pair and triple mixes for interaction terms.
    int orders = 1;
    bool include_dummy = false;
    // Test hook forwarded to PawnConfig::seeded_subsample: when false the
    // inner analyses ignore eps entirely, making eps a verifiable null
    // design parameter.
    bool seeded_subsample = true;
};

// The meta design: paired design-point matrices sampled from the setting's
// distributions (one Sobol' draw of shape (rows, 2 k_meta), split and
// transformed, N/n/eps rounded to nearest integer).
struct MetaDesign {
    std::vector<DesignPoint> a;
    std::vector<DesignPoint> b;
};

// Throws ConfigError when rows < 8.
MetaDesign build_meta_design(const Setting& setting, std::size_t rows);

// Replaces the fields named by `subset` (indices into the setting's
// parameter order) in `a` with the values from `b`.
DesignPoint mix_design_point(const Setting& setting, const DesignPoint& a,
                             const DesignPoint& b,
                             std::span<const std::size_t> subset);

// One inner PAWN analysis at a design point: draws the row's own segment of
// the Sobol' sequence (offset derived from global_seed and row_id, shared by
// every block at the same row position), evaluates the function, and
// computes the PAWN index of every input with (n, eps, theta).
std::vector<double> run_inner_pawn(const DesignPoint& point,
                                   const FunctionSpec& fn,
                                   std::uint64_t global_seed,
                                   std::size_t row_id,
                                   bool include_dummy = false,
                                   bool seeded_subsample = true);

// One inner total-order analysis: base size int(N / (k+1)), base-plus-mixes
// design (the mirror matrix is drawn but not evaluated, keeping the run
// budget at base*(k+1)), estimator chosen by theta. Returns raw values.
std::vector<double> run_inner_total_order(const DesignPoint& point,
                                          const FunctionSpec& fn,
                                          std::uint64_t global_seed,
                                          std::size_t row_id);

// Runs the full meta-experiment: every row of A, B, and the requested mix
// blocks through the inner analysis, in parallel across rows. Results are
// written to pre-indexed slots, so any parallelism level yields an
// identical MetaResult.
MetaResult run_meta(const MetaConfig& config);

// Meta-level Sobol' estimates (Saltelli-2010 first order, Jansen total,
// inclusion-exclusion interactions) of the design parameters, one
// SobolEstimates per model input, using the clamped index values as the
// meta-model output. Requires meta.orders >= 1.
std::vector<SobolEstimates> meta_sensitivity(const MetaResult& meta);

// Ranking/screening diagnostics over the pooled (A and B) per-input index
// distributions.
struct RankingScreeningReport {
    OverlapMatrix overlap;
    // Model inputs sorted by descending median index value.
    std::vector<std::string> ranked_labels;
    std::vector<double> ranked_medians;
    // Overlap between each adjacent pair in the ranking (size = inputs - 1).
    std::vector<double> adjacent_overlaps;
    // When truth labels are supplied: one row per (influential,
    // non-influential) pair with its overlap.
    struct CrossPair {
        std::string influential;
        std::string non_influential;
        double overlap;
    };
    std::vector<CrossPair> screening_pairs;
};

RankingScreeningReport ranking_screening_report(
    const MetaResult& meta,
    const std::optional<std::set<std::string>>& influential_truth = {});

// The conventional ground-truth influential set for each benchmark function
// (used by screening reports): liu {X1, X2}; ishigami {X1, X3};
// sobol_g {X1..X4}; morris {X1..X10}.
std::set<std::string> influential_inputs(const FunctionSpec& fn);

}  // namespace gsa
