// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0

#include "gsa/meta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsa/errors.hpp"
#include "gsa/parallel.hpp"
#include "gsa/pawn.hpp"
#include "gsa/seeding.hpp"
#include "gsa/sobol_sequence.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

// Stride between the sequence segments of consecutive meta rows. Must
// exceed the largest inner sample any setting can request (N <= 4000).
constexpr std::uint64_t kInnerSequenceStride = 8192;

// Start of row `row_id`'s segment of the Sobol' sequence. The offset
// depends only on (global_seed, row_id) — never on which block (A, B, or a
// mix) the row belongs to — so two blocks that agree in every
// sample-shaping parameter at the same row position produce identical inner
// samples. That is what lets a genuinely inert design parameter show an
// exactly-zero meta index.
std::uint64_t inner_sequence_offset(std::uint64_t global_seed, std::size_t row_id) {
    const std::uint64_t base = splitmix64(global_seed) & ((1ull << 30) - 1);
    return 1 + base + static_cast<std::uint64_t>(row_id) * kInnerSequenceStride;
}

const Setting& max_in_theta_setting() {
    static const Setting s{Setting::Name::MaxInTheta,
                           {DistributionSpec::continuous_uniform(200.0, 2000.0),
                            DistributionSpec::continuous_uniform(5.0, 20.0),
                            DistributionSpec::continuous_uniform(1.0, 1000.0),
                            DistributionSpec::discrete_uniform(1.0, 3.0)}};
    return s;
}

const Setting& max_not_in_theta_setting() {
    static const Setting s{Setting::Name::MaxNotInTheta,
                           {DistributionSpec::continuous_uniform(200.0, 2000.0),
                            DistributionSpec::continuous_uniform(5.0, 20.0),
                            DistributionSpec::continuous_uniform(1.0, 1000.0),
                            DistributionSpec::discrete_uniform(1.0, 2.0)}};
    return s;
}

const Setting& optimum_setting() {
    static const Setting s{Setting::Name::Optimum,
                           {DistributionSpec::continuous_uniform(2500.0, 4000.0),
                            DistributionSpec::continuous_uniform(15.0, 20.0),
                            DistributionSpec::continuous_uniform(1.0, 1000.0),
                            DistributionSpec::discrete_uniform(1.0, 2.0)}};
    return s;
}

const Setting& total_order_star_setting() {
    static const Setting s{Setting::Name::TotalOrderStar,
                           {DistributionSpec::continuous_uniform(200.0, 2000.0),
                            DistributionSpec::discrete_uniform(1.0, 3.0)}};
    return s;
}

DesignPoint point_from_row(const Setting& setting, std::span<const double> row) {
    DesignPoint p;
    if (setting.is_pawn()) {
        p.N = std::llround(row[0]);
        p.n = std::llround(row[1]);
        p.eps = std::llround(row[2]);
        p.theta = static_cast<int>(row[3]);
    } else {
        p.N = std::llround(row[0]);
        p.theta = static_cast<int>(row[1]);
    }
    return p;
}

}  // namespace

std::string_view Setting::name_string() const {
    switch (name) {
        case Name::MaxInTheta: return "max_in_theta";
        case Name::MaxNotInTheta: return "max_not_in_theta";
        case Name::Optimum: return "optimum";
        case Name::TotalOrderStar: return "total_order_star";
    }
    return "unknown";
}

std::vector<std::string> Setting::parameter_labels() const {
    if (is_pawn()) return {"N", "n", "eps", "theta"};
    return {"N", "theta"};
}

const Setting& Setting::by_name(std::string_view name) {
    if (name == "max_in_theta") return max_in_theta_setting();
    if (name == "max_not_in_theta") return max_not_in_theta_setting();
    if (name == "optimum") return optimum_setting();
    if (name == "total_order_star") return total_order_star_setting();
    throw ConfigError("unknown setting '" + std::string(name) +
                      "' (expected max_in_theta, max_not_in_theta, optimum, or "
                      "total_order_star)");
}

const std::vector<const Setting*>& Setting::all() {
    static const std::vector<const Setting*> settings = {
        &max_in_theta_setting(), &max_not_in_theta_setting(), &optimum_setting(),
        &total_order_star_setting()};
    return settings;
}

std::vector<double> MetaResult::pooled_values(std::size_t input) const {
    std::vector<double> out;
    out.reserve(2 * rows);
    for (const MetaRow& row : a_rows) out.push_back(row.values[input]);
    for (const MetaRow& row : b_rows) out.push_back(row.values[input]);
    return out;
}

MetaDesign build_meta_design(const Setting& setting, std::size_t rows) {
    if (rows < 8) {
        throw ConfigError("meta design needs rows >= 8, got " + std::to_string(rows));
    }
    const std::size_t k = setting.k_meta();
    const Matrix joint = sobol_sequence(2 * k, rows, /*skip=*/1);

    MetaDesign design;
    design.a.reserve(rows);
    design.b.reserve(rows);
    std::vector<double> buffer(k);
    for (std::size_t v = 0; v < rows; ++v) {
        for (std::size_t j = 0; j < k; ++j) {
            buffer[j] = setting.distributions[j].quantile(joint(v, j));
        }
        design.a.push_back(point_from_row(setting, buffer));
        for (std::size_t j = 0; j < k; ++j) {
            buffer[j] = setting.distributions[j].quantile(joint(v, k + j));
        }
        design.b.push_back(point_from_row(setting, buffer));
    }
    return design;
}

DesignPoint mix_design_point(const Setting& setting, const DesignPoint& a,
                             const DesignPoint& b,
                             std::span<const std::size_t> subset) {
    DesignPoint mixed = a;
    for (std::size_t column : subset) {
        if (setting.is_pawn()) {
            switch (column) {
                case 0: mixed.N = b.N; break;
                case 1: mixed.n = b.n; break;
                case 2: mixed.eps = b.eps; break;
                case 3: mixed.theta = b.theta; break;
                default:
                    throw InvalidOrderError("design-parameter column out of range");
            }
        } else {
            switch (column) {
                case 0: mixed.N = b.N; break;
                case 1: mixed.theta = b.theta; break;
                default:
                    throw InvalidOrderError("design-parameter column out of range");
            }
        }
    }
    return mixed;
}

std::vector<double> run_inner_pawn(const DesignPoint& point,
                                   const FunctionSpec& fn,
                                   std::uint64_t global_seed, std::size_t row_id,
                                   bool include_dummy, bool seeded_subsample) {
    const std::size_t N = static_cast<std::size_t>(point.N);
    const std::size_t dim = fn.k + (include_dummy ? 1 : 0);
    const Matrix unit =
        sobol_sequence(dim, N, inner_sequence_offset(global_seed, row_id));
    const Matrix inputs = transform(unit, fn.input_specs(include_dummy));
    const std::vector<double> y = eval_rows(fn, inputs);

    PawnConfig config;
    config.n = static_cast<std::size_t>(point.n);
    config.theta = summary_statistic_from_tag(point.theta);
    config.seed = static_cast<std::uint64_t>(point.eps);
    config.seeded_subsample = seeded_subsample;
    return pawn_indices(inputs, y, config).values;
}

std::vector<double> run_inner_total_order(const DesignPoint& point,
                                          const FunctionSpec& fn,
                                          std::uint64_t global_seed,
                                          std::size_t row_id) {
    const std::size_t base =
        static_cast<std::size_t>(point.N) / (fn.k + 1);  // int(N / (k+1))
    if (base < 8) {
        throw InsufficientSampleError(
            "total-order base size int(N/(k+1)) = " + std::to_string(base) +
            " too small (need >= 8)");
    }
    const EstimatorDesign design = build_estimator_design(
        base, fn.k, /*max_subset_order=*/1,
        inner_sequence_offset(global_seed, row_id));
    const EvaluatedDesign ev =
        evaluate_design(design, fn, /*evaluate_mirror=*/false);
    const TotalOrderEstimator estimator = total_order_estimator_from_tag(point.theta);

    std::vector<double> raw(fn.k);
    for (std::size_t i = 0; i < fn.k; ++i) raw[i] = total_order(ev, i, estimator);
    return raw;
}

MetaResult run_meta(const MetaConfig& config) {
    const Setting& setting = Setting::by_name(config.setting);
    const FunctionSpec& fn = FunctionSpec::by_name(config.function);
    const std::size_t k_meta = setting.k_meta();
    if (config.orders < 0 || config.orders > 3 ||
        static_cast<std::size_t>(config.orders) > k_meta) {
        throw InvalidOrderError("meta orders " + std::to_string(config.orders) +
                                " invalid for " + std::string(setting.name_string()) +
                                " (k_meta=" + std::to_string(k_meta) + ")");
    }
    if (!setting.is_pawn() && config.include_dummy) {
        throw ConfigError("the dummy input applies to PAWN settings only");
    }

    const MetaDesign design = build_meta_design(setting, config.rows);
    const bool with_dummy = setting.is_pawn() && config.include_dummy;

    MetaResult result;
    result.setting = std::string(setting.name_string());
    result.function = std::string(fn.name_string());
    result.input_labels = fn.labels(with_dummy);
    result.rows = config.rows;
    result.global_seed = config.global_seed;
    result.orders = config.orders;

    // Mix subsets in the same order build_estimator_design uses: size 1
    // ascending, then lexicographic pairs, then triples.
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t size = 1; size <= static_cast<std::size_t>(config.orders);
         ++size) {
        std::vector<std::size_t> subset(size);
        for (std::size_t i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            subsets.push_back(subset);
            std::size_t pos = size;
            while (pos > 0 && subset[pos - 1] == k_meta - size + (pos - 1)) --pos;
            if (pos == 0) break;
            ++subset[pos - 1];
            for (std::size_t i = pos; i < size; ++i) subset[i] = subset[i - 1] + 1;
        }
    }

    const std::size_t R = config.rows;
    result.a_rows.resize(R);
    result.b_rows.resize(R);
    result.mix_blocks.resize(subsets.size());
    for (std::size_t m = 0; m < subsets.size(); ++m) {
        result.mix_blocks[m].subset = subsets[m];
        result.mix_blocks[m].rows.resize(R);
    }

    const std::size_t blocks = 2 + subsets.size();
    parallel_for(blocks * R, config.parallelism, [&](std::size_t job) {
        const std::size_t block = job / R;
        const std::size_t v = job % R;

        DesignPoint point;
        MetaRow* slot = nullptr;
        if (block == 0) {
            point = design.a[v];
            slot = &result.a_rows[v];
        } else if (block == 1) {
            point = design.b[v];
            slot = &result.b_rows[v];
        } else {
            const std::vector<std::size_t>& subset = subsets[block - 2];
            point = mix_design_point(setting, design.a[v], design.b[v], subset);
            slot = &result.mix_blocks[block - 2].rows[v];
        }

        MetaRow row;
        row.point = point;
        try {
            if (setting.is_pawn()) {
                row.values = run_inner_pawn(point, fn, config.global_seed, v,
                                            with_dummy, config.seeded_subsample);
                row.raw_values = row.values;
            } else {
                row.raw_values =
                    run_inner_total_order(point, fn, config.global_seed, v);
                row.values.resize(row.raw_values.size());
                for (std::size_t i = 0; i < row.raw_values.size(); ++i) {
                    row.values[i] = clamp01(row.raw_values[i]);
                }
            }
        } catch (const Error& e) {
            throw NumericError("meta row " + std::to_string(v) + " (block " +
                               std::to_string(block) + "): " + e.what());
        }
        *slot = std::move(row);
    });
    return result;
}

std::vector<SobolEstimates> meta_sensitivity(const MetaResult& meta) {
    if (meta.orders < 1) {
        throw DesignIncompleteError(
            "meta-sensitivity needs mix blocks; rerun with orders >= 1");
    }
    const Setting& setting = Setting::by_name(meta.setting);
    const std::size_t k_meta = setting.k_meta();
    const std::size_t n_inputs = meta.input_labels.size();

    std::vector<SobolEstimates> out;
    out.reserve(n_inputs);
    for (std::size_t input = 0; input < n_inputs; ++input) {
        EvaluatedDesign ev;
        ev.k = k_meta;
        ev.y_base.reserve(meta.rows);
        ev.y_mirror.reserve(meta.rows);
        for (const MetaRow& row : meta.a_rows) ev.y_base.push_back(row.values[input]);
        for (const MetaRow& row : meta.b_rows)
            ev.y_mirror.push_back(row.values[input]);
        for (const MetaBlock& block : meta.mix_blocks) {
            EvaluatedDesign::MixOutputs mix;
            mix.subset = block.subset;
            mix.y.reserve(meta.rows);
            for (const MetaRow& row : block.rows) mix.y.push_back(row.values[input]);
            ev.y_mix.push_back(std::move(mix));
        }
        out.push_back(
            interaction_indices(ev, TotalOrderEstimator::Jansen, meta.orders));
    }
    return out;
}

RankingScreeningReport ranking_screening_report(
    const MetaResult& meta,
    const std::optional<std::set<std::string>>& influential_truth) {
    const std::size_t n_inputs = meta.input_labels.size();
    if (n_inputs < 2) {
        throw InsufficientSampleError("ranking report needs >= 2 model inputs");
    }
    std::vector<std::vector<double>> samples;
    samples.reserve(n_inputs);
    for (std::size_t i = 0; i < n_inputs; ++i) {
        samples.push_back(meta.pooled_values(i));
    }

    RankingScreeningReport report;
    report.overlap = overlap_matrix(meta.input_labels, samples);

    std::vector<std::size_t> order(n_inputs);
    std::vector<double> medians(n_inputs);
    for (std::size_t i = 0; i < n_inputs; ++i) {
        order[i] = i;
        medians[i] = median(samples[i]);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return medians[a] > medians[b];
    });
    for (std::size_t rank = 0; rank < n_inputs; ++rank) {
        report.ranked_labels.push_back(meta.input_labels[order[rank]]);
        report.ranked_medians.push_back(medians[order[rank]]);
    }
    for (std::size_t rank = 0; rank + 1 < n_inputs; ++rank) {
        report.adjacent_overlaps.push_back(
            report.overlap.at(order[rank], order[rank + 1]));
    }

    if (influential_truth.has_value()) {
        for (std::size_t i = 0; i < n_inputs; ++i) {
            if (influential_truth->count(meta.input_labels[i]) == 0) continue;
            for (std::size_t j = 0; j < n_inputs; ++j) {
                if (influential_truth->count(meta.input_labels[j]) != 0) continue;
                report.screening_pairs.push_back({meta.input_labels[i],
                                                  meta.input_labels[j],
                                                  report.overlap.at(i, j)});
            }
        }
    }
    return report;
}

std::set<std::string> influential_inputs(const FunctionSpec& fn) {
    switch (fn.name) {
        case FunctionName::Liu: return {"X1", "X2"};
        case FunctionName::Ishigami: return {"X1", "X3"};
        case FunctionName::SobolG: return {"X1", "X2", "X3", "X4"};
        case FunctionName::Morris: {
            std::set<std::string> s;
            for (int i = 1; i <= 10; ++i) s.insert("X" + std::to_string(i));
            return s;
        }
    }
    throw ConfigError("unknown function");
}

}  // namespace gsa
