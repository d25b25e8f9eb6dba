// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
//
// gsa: command-line driver for the sensitivity-analysis toolkit.
//
// Subcommands:
//   compute-indices   one-shot PAWN / variance-based indices of a function
//   run-meta          the design-parameter uncertainty experiment
//   overlap           pairwise overlap matrix from an existing meta_result.csv
//   convergence-scan  index mean/sd across repeated runs over a list of N
//
// Exit codes: 0 success; 2 usage or configuration error; 3 numeric or
// degenerate-data error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gsa/gsa.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::uint64_t cli_sequence_offset(std::uint64_t seed) {
    return 1 + (gsa::splitmix64(seed) & ((1ull << 30) - 1));
}

unsigned default_parallelism() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::string default_out_dir() {
    if (const char* env = std::getenv("GSA_OUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw gsa::ConfigError("cannot create output directory '" + dir +
                               "': " + ec.message());
    }
}

// One decimal percentage, e.g. 0.2937 -> "29.4".
std::string fmt_pct(double fraction) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.1f", fraction * 100.0);
    return buffer;
}

std::string fmt3(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3f", v);
    return buffer;
}

std::string subset_label(const std::vector<std::string>& param_labels,
                         std::span<const std::size_t> subset) {
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += '*';
        s += param_labels[subset[i]];
    }
    return s;
}

// ---------------------------------------------------------------------------
// compute-indices

struct ComputeArgs {
    std::string function;
    std::string method = "pawn";
    std::size_t N = 4096;
    std::size_t n = 10;
    int theta = 1;
    std::uint64_t seed = 1;
    int orders = 1;
    bool dummy = false;
    std::string out_dir = default_out_dir();
};

int cmd_compute_indices(const ComputeArgs& args) {
    const gsa::FunctionSpec& fn = gsa::FunctionSpec::by_name(args.function);
    const std::vector<std::string> labels = fn.labels(args.dummy);

    gsa::CsvBuilder csv;
    csv.comment("gsa compute-indices");
    csv.comment("function=" + args.function + " method=" + args.method +
                " N=" + std::to_string(args.N) + " n=" + std::to_string(args.n) +
                " theta=" + std::to_string(args.theta) +
                " seed=" + std::to_string(args.seed) +
                " orders=" + std::to_string(args.orders) +
                " dummy=" + std::string(args.dummy ? "1" : "0"));
    const std::vector<std::string> header = {"method", "input_label", "value",
                                             "raw_value"};
    csv.header(header);

    if (args.method == "pawn") {
        gsa::DesignPoint point;
        point.N = static_cast<long long>(args.N);
        point.n = static_cast<long long>(args.n);
        point.eps = static_cast<long long>(args.seed);
        point.theta = args.theta;
        const std::vector<double> values =
            gsa::run_inner_pawn(point, fn, args.seed, /*row_id=*/0, args.dummy);
        for (std::size_t i = 0; i < values.size(); ++i) {
            csv.row().cell(args.method).cell(labels[i]).cell(values[i]).cell(values[i]);
        }
    } else if (args.method == "sobol_first" || args.method == "sobol_total" ||
               args.method == "sobol_all") {
        const int max_order = args.method == "sobol_all" ? args.orders : 1;
        const std::size_t k = fn.k + (args.dummy ? 1 : 0);
        const gsa::EstimatorDesign design = gsa::build_estimator_design(
            args.N, k, max_order, cli_sequence_offset(args.seed));
        const gsa::EvaluatedDesign ev = gsa::evaluate_design(design, fn);
        const gsa::TotalOrderEstimator estimator =
            gsa::total_order_estimator_from_tag(args.theta);

        if (args.method == "sobol_first") {
            for (std::size_t i = 0; i < k; ++i) {
                const double raw = gsa::first_order(ev, i);
                csv.row().cell(args.method).cell(labels[i]).cell(gsa::clamp01(raw)).cell(raw);
            }
        } else if (args.method == "sobol_total") {
            for (std::size_t i = 0; i < k; ++i) {
                const double raw = gsa::total_order(ev, i, estimator);
                csv.row().cell(args.method).cell(labels[i]).cell(gsa::clamp01(raw)).cell(raw);
            }
        } else {
            const gsa::SobolEstimates est =
                gsa::interaction_indices(ev, estimator, max_order);
            for (std::size_t i = 0; i < k; ++i) {
                csv.row().cell("sobol_first").cell(labels[i])
                    .cell(gsa::clamp01(est.first[i])).cell(est.first[i]);
            }
            for (std::size_t i = 0; i < k; ++i) {
                csv.row().cell("sobol_total").cell(labels[i])
                    .cell(gsa::clamp01(est.total[i])).cell(est.total[i]);
            }
            for (const auto& [pair, value] : est.second) {
                csv.row().cell("sobol_second")
                    .cell(labels[pair.first] + "*" + labels[pair.second])
                    .cell(gsa::clamp01(value)).cell(value);
            }
            for (const auto& [triple, value] : est.third) {
                csv.row().cell("sobol_third")
                    .cell(labels[triple[0]] + "*" + labels[triple[1]] + "*" +
                          labels[triple[2]])
                    .cell(gsa::clamp01(value)).cell(value);
            }
        }
    } else {
        throw gsa::ConfigError("unknown method '" + args.method +
                               "' (expected pawn, sobol_first, sobol_total, or "
                               "sobol_all)");
    }

    ensure_dir(args.out_dir);
    const std::string path = join_path(args.out_dir, "indices.csv");
    csv.write(path);
    std::printf("wrote %s\n", path.c_str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// run-meta

struct RunMetaArgs {
    std::string setting = "max_in_theta";
    std::string function = "ishigami";
    std::size_t rows = 1u << 10;
    std::uint64_t seed = 1;
    unsigned parallelism = default_parallelism();
    int orders = 1;
    bool dummy = false;
    std::string subsample_mode = "seeded";
    std::string pooling = "both";  // per_pair | per_function | both
    std::string out_dir = default_out_dir();
};

std::string config_comment(const RunMetaArgs& args, const std::string& function) {
    // Parallelism is deliberately omitted: it cannot affect any output byte.
    return "setting=" + args.setting + " function=" + function +
           " rows=" + std::to_string(args.rows) +
           " seed=" + std::to_string(args.seed) +
           " orders=" + std::to_string(args.orders) +
           " dummy=" + std::string(args.dummy ? "1" : "0") +
           " subsample=" + args.subsample_mode;
}

void write_meta_result_csv(const std::string& path, const gsa::MetaResult& meta,
                           const std::string& config_line) {
    gsa::CsvBuilder csv;
    csv.comment("gsa run-meta: per-row index values (A block, then B block)");
    csv.comment(config_line);
    const std::vector<std::string> header = {
        "setting", "function", "row_id", "N",           "n",
        "eps",     "theta",    "input_label", "index_value", "raw_value"};
    csv.header(header);
    const auto emit_block = [&](const std::vector<gsa::MetaRow>& rows,
                                std::size_t id_offset) {
        for (std::size_t v = 0; v < rows.size(); ++v) {
            const gsa::MetaRow& row = rows[v];
            for (std::size_t i = 0; i < meta.input_labels.size(); ++i) {
                csv.row()
                    .cell(meta.setting)
                    .cell(meta.function)
                    .cell(id_offset + v)
                    .cell(static_cast<std::int64_t>(row.point.N))
                    .cell(static_cast<std::int64_t>(row.point.n))
                    .cell(static_cast<std::int64_t>(row.point.eps))
                    .cell(row.point.theta)
                    .cell(meta.input_labels[i])
                    .cell(row.values[i])
                    .cell(row.raw_values[i]);
            }
        }
    };
    emit_block(meta.a_rows, 0);
    emit_block(meta.b_rows, meta.rows);
    csv.write(path);
}

void write_overlap_csv(const std::string& path, const gsa::OverlapMatrix& matrix,
                       const std::string& config_line) {
    gsa::CsvBuilder csv;
    csv.comment("gsa: pairwise coefficient of overlapping (raw fractions)");
    csv.comment(config_line);
    std::vector<std::string> header = {"input_label"};
    header.insert(header.end(), matrix.labels.begin(), matrix.labels.end());
    csv.header(header);
    for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        auto row = csv.row();
        row.cell(matrix.labels[i]);
        for (std::size_t j = 0; j < matrix.labels.size(); ++j) {
            row.cell(matrix.at(i, j));
        }
    }
    csv.write(path);
}

struct MetaEstimateRow {
    std::string index_type;  // first | total | second | third
    std::string parameters;  // e.g. "N" or "N*n"
    std::vector<double> raw;      // per model input
    std::vector<double> clamped;  // per model input
};

std::vector<MetaEstimateRow> collect_meta_estimates(
    const gsa::Setting& setting, const std::vector<gsa::SobolEstimates>& est) {
    const std::vector<std::string> params = setting.parameter_labels();
    std::vector<MetaEstimateRow> rows;
    const std::size_t k = setting.k_meta();
    for (std::size_t p = 0; p < k; ++p) {
        MetaEstimateRow first{"first", params[p], {}, {}};
        MetaEstimateRow total{"total", params[p], {}, {}};
        for (const gsa::SobolEstimates& e : est) {
            first.raw.push_back(e.first[p]);
            first.clamped.push_back(gsa::clamp01(e.first[p]));
            total.raw.push_back(e.total[p]);
            total.clamped.push_back(gsa::clamp01(e.total[p]));
        }
        rows.push_back(std::move(first));
        rows.push_back(std::move(total));
    }
    if (!est.empty() && !est.front().second.empty()) {
        for (const auto& [pair, unused] : est.front().second) {
            (void)unused;
            const std::size_t subset[2] = {pair.first, pair.second};
            MetaEstimateRow r{"second", subset_label(params, subset), {}, {}};
            for (const gsa::SobolEstimates& e : est) {
                const double v = e.second.at(pair);
                r.raw.push_back(v);
                r.clamped.push_back(gsa::clamp01(v));
            }
            rows.push_back(std::move(r));
        }
    }
    if (!est.empty() && !est.front().third.empty()) {
        for (const auto& [triple, unused] : est.front().third) {
            (void)unused;
            const std::size_t subset[3] = {triple[0], triple[1], triple[2]};
            MetaEstimateRow r{"third", subset_label(params, subset), {}, {}};
            for (const gsa::SobolEstimates& e : est) {
                const double v = e.third.at(triple);
                r.raw.push_back(v);
                r.clamped.push_back(gsa::clamp01(v));
            }
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

void write_meta_sensitivity_csv(const std::string& path,
                                const gsa::MetaResult& meta,
                                const std::vector<MetaEstimateRow>& rows,
                                const std::string& config_line) {
    gsa::CsvBuilder csv;
    csv.comment(
        "gsa run-meta: Sobol' indices of the design parameters per model input");
    csv.comment("meta estimators: first order Saltelli-2010, total order Jansen");
    csv.comment(config_line);
    const std::vector<std::string> header = {"setting",    "function",
                                             "input_label", "index_type",
                                             "parameters", "raw_value",
                                             "clamped_value"};
    csv.header(header);
    if (rows.empty()) return csv.write(path);

    for (const MetaEstimateRow& r : rows) {
        for (std::size_t i = 0; i < meta.input_labels.size(); ++i) {
            csv.row()
                .cell(meta.setting)
                .cell(meta.function)
                .cell(meta.input_labels[i])
                .cell(r.index_type)
                .cell(r.parameters)
                .cell(r.raw[i])
                .cell(r.clamped[i]);
        }
        // Pooled rows: quartiles of the per-input values.
        const char* stats[3] = {"(pooled-q25)", "(pooled-median)", "(pooled-q75)"};
        const double ps[3] = {0.25, 0.5, 0.75};
        for (int s = 0; s < 3; ++s) {
            csv.row()
                .cell(meta.setting)
                .cell(meta.function)
                .cell(stats[s])
                .cell(r.index_type)
                .cell(r.parameters)
                .cell(gsa::quantile(r.raw, ps[s]))
                .cell(gsa::quantile(r.clamped, ps[s]));
        }
    }
    csv.write(path);
}

std::string build_summary_md(const gsa::MetaResult& meta,
                             const gsa::RankingScreeningReport& report,
                             const std::vector<MetaEstimateRow>& estimates,
                             const std::string& config_line) {
    std::ostringstream md;
    md << "# Sensitivity-of-sensitivity summary\n\n";
    md << "Configuration: `" << config_line << "`\n\n";
    md << "Index samples per model input: " << 2 * meta.rows
       << " (A and B blocks pooled).\n\n";

    md << "## Index distributions (clamped values)\n\n";
    md << "| input | median | q25 | q75 |\n|---|---|---|---|\n";
    for (std::size_t i = 0; i < meta.input_labels.size(); ++i) {
        const std::vector<double> sample = meta.pooled_values(i);
        md << "| " << meta.input_labels[i] << " | " << fmt3(gsa::median(sample))
           << " | " << fmt3(gsa::quantile(sample, 0.25)) << " | "
           << fmt3(gsa::quantile(sample, 0.75)) << " |\n";
    }

    md << "\n## Ranking (by median index) and adjacent overlaps\n\n";
    for (std::size_t r = 0; r < report.ranked_labels.size(); ++r) {
        md << (r + 1) << ". " << report.ranked_labels[r] << " (median "
           << fmt3(report.ranked_medians[r]) << ")";
        if (r + 1 < report.ranked_labels.size()) {
            md << " -- overlap with next: " << fmt_pct(report.adjacent_overlaps[r])
               << "%";
        }
        md << "\n";
    }

    double max_overlap = 0.0;
    std::size_t max_i = 0, max_j = 1;
    for (std::size_t i = 0; i < meta.input_labels.size(); ++i) {
        for (std::size_t j = i + 1; j < meta.input_labels.size(); ++j) {
            if (report.overlap.at(i, j) > max_overlap) {
                max_overlap = report.overlap.at(i, j);
                max_i = i;
                max_j = j;
            }
        }
    }
    md << "\nLargest pairwise overlap: " << meta.input_labels[max_i] << " vs "
       << meta.input_labels[max_j] << " at " << fmt_pct(max_overlap) << "%.\n";

    if (!report.screening_pairs.empty()) {
        double lo = 1.0, hi = 0.0, sum = 0.0;
        for (const auto& pair : report.screening_pairs) {
            lo = std::min(lo, pair.overlap);
            hi = std::max(hi, pair.overlap);
            sum += pair.overlap;
        }
        md << "\n## Screening vs conventional truth\n\n";
        md << "Influential-vs-non-influential overlap across "
           << report.screening_pairs.size() << " pairs: min " << fmt_pct(lo)
           << "%, mean "
           << fmt_pct(sum / static_cast<double>(report.screening_pairs.size()))
           << "%, max " << fmt_pct(hi) << "%.\n";
    }

    if (!estimates.empty()) {
        md << "\n## Design-parameter sensitivity (pooled across model inputs)\n\n";
        md << "| parameters | type | median | max |\n|---|---|---|---|\n";
        for (const MetaEstimateRow& r : estimates) {
            const double med = gsa::quantile(r.clamped, 0.5);
            const double mx = *std::max_element(r.clamped.begin(), r.clamped.end());
            md << "| " << r.parameters << " | " << r.index_type << " | "
               << fmt3(med) << " | " << fmt3(mx) << " |\n";
        }
    }
    return std::move(md).str();
}

int run_meta_single(const RunMetaArgs& args, const std::string& function,
                    const std::string& out_dir,
                    std::vector<MetaEstimateRow>* estimates_out,
                    std::vector<std::string>* input_labels_out) {
    gsa::MetaConfig config;
    config.setting = args.setting;
    config.function = function;
    config.rows = args.rows;
    config.global_seed = args.seed;
    config.parallelism = args.parallelism;
    config.orders = args.orders;
    config.include_dummy = args.dummy;
    config.seeded_subsample = args.subsample_mode == "seeded";

    const gsa::MetaResult meta = gsa::run_meta(config);
    const gsa::Setting& setting = gsa::Setting::by_name(args.setting);
    const gsa::FunctionSpec& fn = gsa::FunctionSpec::by_name(function);
    const std::string config_line = config_comment(args, function);

    ensure_dir(out_dir);
    write_meta_result_csv(join_path(out_dir, "meta_result.csv"), meta, config_line);

    const gsa::RankingScreeningReport report =
        gsa::ranking_screening_report(meta, gsa::influential_inputs(fn));
    write_overlap_csv(join_path(out_dir, "overlap.csv"), report.overlap,
                      config_line);

    std::vector<MetaEstimateRow> estimates;
    if (args.orders >= 1) {
        estimates = collect_meta_estimates(setting, gsa::meta_sensitivity(meta));
    }
    write_meta_sensitivity_csv(join_path(out_dir, "meta_sensitivity.csv"), meta,
                               estimates, config_line);
    gsa::write_text_file(join_path(out_dir, "summary.md"),
                         build_summary_md(meta, report, estimates, config_line));

    if (estimates_out != nullptr) *estimates_out = std::move(estimates);
    if (input_labels_out != nullptr) *input_labels_out = meta.input_labels;
    return kExitOk;
}

void write_pooled_csv(const std::string& path, const RunMetaArgs& args,
                      const std::vector<std::string>& functions,
                      const std::vector<std::vector<MetaEstimateRow>>& per_fn) {
    // Pool each meta-estimate over (function, model-input) observations in
    // two modes: per_pair weighs every (function, input) pair equally;
    // per_function first reduces each function to its median, then pools the
    // four medians.
    gsa::CsvBuilder csv;
    csv.comment("gsa run-meta --function all: pooled design-parameter sensitivity");
    csv.comment(config_comment(args, "all"));
    const std::vector<std::string> header = {"setting",    "pooling_mode",
                                             "index_type", "parameters",
                                             "stat",       "value"};
    csv.header(header);
    if (per_fn.empty() || per_fn.front().empty()) return csv.write(path);

    const bool want_pair = args.pooling == "per_pair" || args.pooling == "both";
    const bool want_fn = args.pooling == "per_function" || args.pooling == "both";
    const std::size_t n_rows = per_fn.front().size();
    for (std::size_t r = 0; r < n_rows; ++r) {
        const std::string& type = per_fn.front()[r].index_type;
        const std::string& params = per_fn.front()[r].parameters;
        std::vector<double> pair_obs;
        std::vector<double> fn_obs;
        for (std::size_t f = 0; f < functions.size(); ++f) {
            const MetaEstimateRow& row = per_fn[f][r];
            pair_obs.insert(pair_obs.end(), row.clamped.begin(), row.clamped.end());
            fn_obs.push_back(gsa::quantile(row.clamped, 0.5));
        }
        const auto emit = [&](const std::string& mode, std::vector<double>& obs) {
            csv.row().cell(args.setting).cell(mode).cell(type).cell(params)
                .cell("q25").cell(gsa::quantile(obs, 0.25));
            csv.row().cell(args.setting).cell(mode).cell(type).cell(params)
                .cell("median").cell(gsa::quantile(obs, 0.5));
            csv.row().cell(args.setting).cell(mode).cell(type).cell(params)
                .cell("q75").cell(gsa::quantile(obs, 0.75));
            csv.row().cell(args.setting).cell(mode).cell(type).cell(params)
                .cell("max").cell(*std::max_element(obs.begin(), obs.end()));
        };
        if (want_pair) emit("per_pair", pair_obs);
        if (want_fn) emit("per_function", fn_obs);
    }
    csv.write(path);
}

int cmd_run_meta(const RunMetaArgs& args) {
    if (args.subsample_mode != "seeded" && args.subsample_mode != "fixed") {
        throw gsa::ConfigError("subsample mode must be 'seeded' or 'fixed', got '" +
                               args.subsample_mode + "'");
    }
    if (args.pooling != "per_pair" && args.pooling != "per_function" &&
        args.pooling != "both") {
        throw gsa::ConfigError(
            "pooling must be 'per_pair', 'per_function', or 'both', got '" +
            args.pooling + "'");
    }
    if (args.function != "all") {
        const int rc = run_meta_single(args, args.function, args.out_dir,
                                       nullptr, nullptr);
        std::printf("wrote meta_result.csv, meta_sensitivity.csv, overlap.csv, "
                    "summary.md under %s\n", args.out_dir.c_str());
        return rc;
    }

    std::vector<std::string> functions;
    for (const gsa::FunctionSpec* fn : gsa::FunctionSpec::all()) {
        functions.emplace_back(fn->name_string());
    }
    std::vector<std::vector<MetaEstimateRow>> per_fn;
    for (const std::string& function : functions) {
        std::vector<MetaEstimateRow> estimates;
        run_meta_single(args, function, join_path(args.out_dir, function),
                        &estimates, nullptr);
        per_fn.push_back(std::move(estimates));
    }
    ensure_dir(args.out_dir);
    write_pooled_csv(join_path(args.out_dir, "pooled_meta_sensitivity.csv"), args,
                     functions, per_fn);
    std::printf("wrote per-function outputs and pooled_meta_sensitivity.csv under "
                "%s\n", args.out_dir.c_str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// overlap (from an existing meta_result.csv)

struct OverlapArgs {
    std::string input_path;
    std::string out_dir = default_out_dir();
};

int cmd_overlap(const OverlapArgs& args) {
    std::ifstream in(args.input_path);
    if (!in) {
        throw gsa::ConfigError("cannot open '" + args.input_path + "'");
    }
    std::string line;
    std::vector<std::string> header;
    std::vector<std::string> labels;                 // first-appearance order
    std::map<std::string, std::vector<double>> values;
    int label_col = -1;
    int value_col = -1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (header.empty()) {
            header = cells;
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (header[i] == "input_label") label_col = static_cast<int>(i);
                if (header[i] == "index_value") value_col = static_cast<int>(i);
            }
            if (label_col < 0 || value_col < 0) {
                throw gsa::ConfigError(
                    "'" + args.input_path +
                    "' lacks the input_label/index_value columns of a "
                    "meta_result.csv");
            }
            continue;
        }
        if (cells.size() != header.size()) {
            throw gsa::InvalidDataError("malformed CSV row: '" + line + "'");
        }
        const std::string& label = cells[static_cast<std::size_t>(label_col)];
        if (values.find(label) == values.end()) labels.push_back(label);
        values[label].push_back(std::stod(cells[static_cast<std::size_t>(value_col)]));
    }
    if (labels.size() < 2) {
        throw gsa::InsufficientSampleError(
            "need index samples for >= 2 model inputs, found " +
            std::to_string(labels.size()));
    }
    std::vector<std::vector<double>> samples;
    samples.reserve(labels.size());
    for (const std::string& label : labels) samples.push_back(values[label]);

    const gsa::OverlapMatrix matrix = gsa::overlap_matrix(labels, samples);
    ensure_dir(args.out_dir);
    const std::string path = join_path(args.out_dir, "overlap.csv");
    write_overlap_csv(path, matrix, "source=" + args.input_path);
    std::printf("wrote %s\n", path.c_str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// convergence-scan

struct ConvergenceArgs {
    std::string function;
    std::string method = "pawn";
    std::vector<std::size_t> n_list;
    std::size_t reps = 5;
    std::size_t n = 10;
    int theta = 1;
    std::uint64_t seed = 1;
    std::string out_dir = default_out_dir();
};

int cmd_convergence_scan(const ConvergenceArgs& args) {
    if (args.reps == 0) {
        throw gsa::ConfigError("reps must be >= 1");
    }
    if (args.n_list.empty()) {
        throw gsa::ConfigError("--N-list must contain at least one sample size");
    }
    if (args.method != "pawn" && args.method != "sobol_total") {
        throw gsa::ConfigError("method must be 'pawn' or 'sobol_total', got '" +
                               args.method + "'");
    }
    const gsa::FunctionSpec& fn = gsa::FunctionSpec::by_name(args.function);
    const std::vector<std::string> labels = fn.labels();

    gsa::CsvBuilder csv;
    csv.comment("gsa convergence-scan: index mean/sd over repeated runs");
    csv.comment("function=" + args.function + " method=" + args.method +
                " reps=" + std::to_string(args.reps) +
                " n=" + std::to_string(args.n) +
                " theta=" + std::to_string(args.theta) +
                " seed=" + std::to_string(args.seed));
    const std::vector<std::string> header = {"function", "method",      "N",
                                             "input_label", "mean_value", "sd_value",
                                             "reps"};
    csv.header(header);

    for (const std::size_t N : args.n_list) {
        // One index vector per repetition; repetition r shifts the seed.
        std::vector<std::vector<double>> reps_values;
        reps_values.reserve(args.reps);
        for (std::size_t r = 0; r < args.reps; ++r) {
            const std::uint64_t rep_seed = args.seed + r;
            gsa::DesignPoint point;
            point.N = static_cast<long long>(N);
            point.n = static_cast<long long>(args.n);
            point.eps = static_cast<long long>(rep_seed);
            point.theta = args.theta;
            if (args.method == "pawn") {
                reps_values.push_back(
                    gsa::run_inner_pawn(point, fn, rep_seed, /*row_id=*/0));
            } else {
                std::vector<double> raw =
                    gsa::run_inner_total_order(point, fn, rep_seed, /*row_id=*/0);
                for (double& v : raw) v = gsa::clamp01(v);
                reps_values.push_back(std::move(raw));
            }
        }
        for (std::size_t i = 0; i < labels.size(); ++i) {
            std::vector<double> obs;
            obs.reserve(args.reps);
            for (const std::vector<double>& rep : reps_values) obs.push_back(rep[i]);
            const double m = gsa::mean(obs);
            const double sd = args.reps > 1 ? gsa::sample_stddev(obs) : 0.0;
            csv.row().cell(args.function).cell(args.method).cell(N)
                .cell(labels[i]).cell(m).cell(sd).cell(args.reps);
        }
    }

    ensure_dir(args.out_dir);
    const std::string path = join_path(args.out_dir, "convergence.csv");
    csv.write(path);
    std::printf("wrote %s\n", path.c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gsa: PAWN and variance-based sensitivity analysis toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value config file");
    app.allow_config_extras(CLI::config_extras_mode::error);

    ComputeArgs compute;
    CLI::App* sub_compute = app.add_subcommand(
        "compute-indices", "Compute sensitivity indices of one function");
    sub_compute->add_option("--function", compute.function,
                            "liu | ishigami | sobol_g | morris")->required();
    sub_compute->add_option("--method", compute.method,
                            "pawn | sobol_first | sobol_total | sobol_all");
    sub_compute->add_option("--N", compute.N,
                            "Sample size (pawn) or base sample size (sobol)");
    sub_compute->add_option("--n", compute.n, "PAWN conditioning intervals");
    sub_compute->add_option("--theta", compute.theta,
                            "Summary statistic / estimator tag (1, 2, or 3)");
    sub_compute->add_option("--seed", compute.seed,
                            "Seed: selects the sequence segment and the PAWN "
                            "subsample stream");
    sub_compute->add_option("--orders", compute.orders,
                            "Interaction order for sobol_all (1-3)");
    sub_compute->add_flag("--dummy", compute.dummy,
                          "Append an inert dummy input");
    sub_compute->add_option("--out", compute.out_dir, "Output directory");

    RunMetaArgs meta;
    CLI::App* sub_meta = app.add_subcommand(
        "run-meta", "Design-parameter uncertainty experiment");
    sub_meta->add_option("--setting", meta.setting,
                         "max_in_theta | max_not_in_theta | optimum | "
                         "total_order_star")->required();
    sub_meta->add_option("--function", meta.function,
                         "liu | ishigami | sobol_g | morris | all")->required();
    sub_meta->add_option("--rows", meta.rows, "Meta design rows per block (>= 8)");
    sub_meta->add_option("--seed", meta.seed, "Global seed");
    sub_meta->add_option("--parallelism", meta.parallelism,
                         "Worker threads (default: hardware concurrency)");
    sub_meta->add_option("--orders", meta.orders,
                         "Largest design-parameter mix evaluated (0-3)");
    sub_meta->add_flag("--dummy", meta.dummy, "Append an inert dummy input");
    sub_meta->add_option("--subsample-mode", meta.subsample_mode,
                         "seeded | fixed (fixed ignores eps; a null-factor "
                         "test mode)");
    sub_meta->add_option("--pooling", meta.pooling,
                         "per_pair | per_function | both (--function all only)");
    sub_meta->add_option("--out", meta.out_dir, "Output directory");

    OverlapArgs overlap;
    CLI::App* sub_overlap = app.add_subcommand(
        "overlap", "Overlap matrix from an existing meta_result.csv");
    sub_overlap->add_option("--input", overlap.input_path,
                            "Path to a meta_result.csv")->required();
    sub_overlap->add_option("--out", overlap.out_dir, "Output directory");

    ConvergenceArgs conv;
    CLI::App* sub_conv = app.add_subcommand(
        "convergence-scan", "Index mean/sd across seeds for a list of N");
    sub_conv->add_option("--function", conv.function,
                         "liu | ishigami | sobol_g | morris")->required();
    sub_conv->add_option("--method", conv.method, "pawn | sobol_total");
    sub_conv->add_option("--N-list", conv.n_list, "Sample sizes to scan")
        ->required()
        ->delimiter(',');
    sub_conv->add_option("--reps", conv.reps, "Repetitions per N (>= 1)");
    sub_conv->add_option("--n", conv.n, "PAWN conditioning intervals");
    sub_conv->add_option("--theta", conv.theta,
                         "Summary statistic / estimator tag (1, 2, or 3)");
    sub_conv->add_option("--seed", conv.seed, "Base seed; rep r uses seed + r");
    sub_conv->add_option("--out", conv.out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sub_compute->parsed()) return cmd_compute_indices(compute);
        if (sub_meta->parsed()) return cmd_run_meta(meta);
        if (sub_overlap->parsed()) return cmd_overlap(overlap);
        if (sub_conv->parsed()) return cmd_convergence_scan(conv);
        std::fprintf(stderr, "no subcommand given\n");
        return kExitUsage;
    } catch (const gsa::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitUsage;
    } catch (const gsa::InvalidOrderError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitUsage;
    } catch (const gsa::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
}
