#include "fockbench/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "fockbench/bundled.hpp"
#include "fockbench/csv.hpp"
#include "fockbench/realization.hpp"
#include "fockbench/report.hpp"
#include "fockbench/sampling.hpp"

namespace fockbench {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

InputKind kind_or(const RunConfig& config, InputKind fallback) {
    return config.input_kind.value_or(fallback);
}

const std::filesystem::path& require_input(const RunConfig& config) {
    if (!config.input_path) throw UsageError("--input is required for this command");
    return *config.input_path;
}

std::vector<MembershipRecord> load_records(const RunConfig& config) {
    const auto& path = require_input(config);
    std::vector<MembershipRecord> records;
    switch (kind_or(config, InputKind::Aggregated)) {
        case InputKind::Raw: {
            const auto responses = read_raw_csv(path);
            records = build_dataset(responses, config.single_source).records;
            break;
        }
        case InputKind::Aggregated:
            records = read_aggregated_csv(path).records;
            break;
        case InputKind::Deviations:
            throw UsageError("this command needs membership weights, not deviation values");
    }
    if (config.pair) {
        std::erase_if(records, [&](const auto& r) { return r.pair_id != *config.pair; });
    }
    return records;
}

std::vector<LabeledDeviation> load_deviations(const RunConfig& config) {
    std::vector<LabeledDeviation> rows;
    if (!config.input_path) {
        rows = load_bundled();
    } else if (kind_or(config, InputKind::Deviations) == InputKind::Deviations) {
        rows = read_deviations_csv(*config.input_path);
    } else {
        for (const auto& r : load_records(config)) {
            rows.push_back({r.pair_id, r.exemplar_id, compute_deviations(r)});
        }
    }
    if (config.pair) {
        std::erase_if(rows, [&](const auto& r) { return r.pair_id != *config.pair; });
    }
    return rows;
}

CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const ParseError& e) {
        return {kExitInput, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kExitInput, "", std::string("error: ") + e.what() + "\n"};
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

CommandResult cmd_deviations(const RunConfig& config) {
    return guarded([&] {
        if (config.tolerance < 0.0) throw UsageError("--tol must be non-negative");
        std::vector<DeviationRow> rows;
        if (kind_or(config, InputKind::Aggregated) == InputKind::Deviations) {
            for (auto& d : load_deviations(config)) {
                const bool classical = d.I.max_abs() <= config.tolerance;
                rows.push_back({std::move(d), classical, std::nullopt});
            }
        } else {
            for (const auto& r : load_records(config)) {
                const auto verdict = is_classical(r, config.tolerance);
                rows.push_back(
                    {{r.pair_id, r.exemplar_id, verdict.deviations}, verdict.classical, decompose(r)});
            }
        }

        CommandResult result;
        switch (config.output_format) {
            case OutputFormat::Json:
                result.output = dump(deviations_report(rows, config.tolerance));
                break;
            case OutputFormat::Table:
                result.output = deviations_table(rows);
                break;
            case OutputFormat::Csv: {
                std::vector<LabeledDeviation> plain;
                for (const auto& r : rows) plain.push_back(r.row);
                std::ostringstream os;
                write_deviations_csv(os, plain);
                result.output = os.str();
                break;
            }
        }
        return result;
    });
}

CommandResult cmd_fit(const RunConfig& config) {
    return guarded([&] {
        const FitConfig fit_config = config.fit_config();
        std::vector<FitRow> rows;
        CommandResult result;
        for (const auto& r : load_records(config)) {
            try {
                rows.push_back({r, fit_exemplar(r, fit_config)});
            } catch (const NoFockRepresentationError& e) {
                rows.push_back({r, e.best()});
                std::ostringstream os;
                os << "infeasible: " << r.pair_id << '/' << r.exemplar_id << " residuals";
                for (double v : e.best().residuals) os << ' ' << format_double(v);
                result.diagnostics += os.str() + "\n";
                result.exit_code = kExitInfeasible;
            }
        }
        switch (config.output_format) {
            case OutputFormat::Json:
                result.output = dump(fit_report(rows, fit_config));
                break;
            case OutputFormat::Table:
                result.output = fit_table(rows);
                break;
            case OutputFormat::Csv:
                result.output = fit_csv(rows);
                break;
        }
        return result;
    });
}

CommandResult cmd_stats(const RunConfig& config) {
    return guarded([&] {
        const auto rows = load_deviations(config);
        std::vector<DeviationVector> data;
        for (const auto& r : rows) data.push_back(r.I);
        const auto report = build_stats_report(data);
        const auto gap = mean_gap(data);

        CommandResult result;
        switch (config.output_format) {
            case OutputFormat::Json:
                result.output = dump(stats_report_json(report, gap));
                break;
            case OutputFormat::Table:
                result.output = stats_table(report, gap);
                break;
            case OutputFormat::Csv:
                result.output = stats_csv(report, gap, data);
                break;
        }
        return result;
    });
}

CommandResult cmd_realize(const RunConfig& config) {
    return guarded([&] {
        const FitConfig fit_config = config.fit_config();
        CommandResult result;
        Json out{{"exemplars", Json::array()}};
        std::ostringstream table;
        std::ostringstream csv;
        csv << "pair,exemplar,vector,index,re,im\n";
        for (const auto& r : load_records(config)) {
            Json entry{{"pair", r.pair_id}, {"exemplar", r.exemplar_id}};
            try {
                const FockFit fit = fit_exemplar(r, fit_config);
                const auto realization = realize_vectors(r, fit);
                const auto check = check_realization(realization, r, fit);
                entry["fit"] = fit;
                entry["realization"] = realization;
                entry["check"] = check;
                table << r.exemplar_id << ": realized, orthonormality "
                      << format_double(check.orthonormality) << ", membership "
                      << format_double(check.membership) << ", interference "
                      << format_double(check.interference) << ", sector2 "
                      << format_double(check.sector2) << '\n';
                auto emit = [&](std::string_view name, const auto& v) {
                    for (Eigen::Index i = 0; i < v.size(); ++i) {
                        csv << r.pair_id << ',' << r.exemplar_id << ',' << name << ',' << i << ','
                            << format_double(v[i].real()) << ','
                            << format_double(v[i].imag()) << '\n';
                    }
                };
                emit("A", realization.concepts[0]);
                emit("B", realization.concepts[1]);
                emit("Ap", realization.concepts[2]);
                emit("Bp", realization.concepts[3]);
                emit("C", realization.state);
            } catch (const NoFockRepresentationError& e) {
                entry["error"] = std::string("no Fock representation: ") + e.what();
                entry["fit"] = e.best();
                result.diagnostics += "infeasible: " + r.pair_id + "/" + r.exemplar_id + "\n";
                table << r.exemplar_id << ": no Fock representation\n";
                result.exit_code = kExitInfeasible;
            } catch (const NoRealizationError& e) {
                entry["error"] = std::string("no realization: ") + e.what();
                entry["check"] = e.achieved();
                result.diagnostics += "unrealizable: " + r.pair_id + "/" + r.exemplar_id + "\n";
                table << r.exemplar_id << ": no realization\n";
                result.exit_code = kExitInfeasible;
            }
            out["exemplars"].push_back(std::move(entry));
        }
        switch (config.output_format) {
            case OutputFormat::Json:
                result.output = dump(out);
                break;
            case OutputFormat::Table:
                result.output = table.str();
                break;
            case OutputFormat::Csv:
                result.output = csv.str();
                break;
        }
        return result;
    });
}

CommandResult cmd_sample(const RunConfig& config) {
    return guarded([&] {
        if (config.subjects < 1) throw UsageError("--subjects must be at least 1");
        std::vector<RawResponse> all;
        std::uint64_t index = 0;
        for (const auto& r : load_records(config)) {
            const std::uint64_t seed = config.seed + index++;
            std::vector<RawResponse> part;
            if (config.sample_from_fit) {
                part = sample_responses(r, fit_exemplar(r, config.fit_config()), config.subjects,
                                        seed);
            } else {
                part = sample_responses(r, config.subjects, seed);
            }
            all.insert(all.end(), part.begin(), part.end());
        }
        std::ostringstream os;
        write_raw_csv(os, all);
        return CommandResult{kExitOk, os.str(), ""};
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classicality tests and Fock space fits for concept conjunction data",
                 "fockbench"};
    app.require_subcommand(1);

    RunConfig config;
    std::string input;
    std::string output;
    std::string pair;

    const std::map<std::string, InputKind> kinds{
        {"raw", InputKind::Raw},
        {"aggregated", InputKind::Aggregated},
        {"deviations", InputKind::Deviations}};
    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"table", OutputFormat::Table}};
    const std::map<std::string, SingleSource> sources{{"canonical", SingleSource::Canonical},
                                                      {"pooled", SingleSource::Pooled}};

    InputKind kind = InputKind::Aggregated;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", input, "Input CSV file");
        sub->add_option("--kind", kind, "Input kind: raw, aggregated or deviations")
            ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
        sub->add_option("--format,-f", config.output_format, "Output format: json, csv or table")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output,-o", output, "Write the report here instead of stdout");
        sub->add_option("--seed", config.seed, "Random seed")->envname("FOCKBENCH_SEED");
        sub->add_option("--pair", pair, "Only use rows of this concept pair");
        sub->add_option("--singles", config.single_source,
                        "Single-concept estimate for raw input: canonical or pooled")
            ->transform(CLI::CheckedTransformer(sources, CLI::ignore_case));
    };
    auto add_fit = [&](CLI::App* sub) {
        sub->add_option("--fit-tol", config.fit_tol, "Largest acceptable fit residual")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--budget", config.budget, "Objective evaluations per exemplar")
            ->check(CLI::PositiveNumber);
    };

    auto* deviations = app.add_subcommand("deviations", "Deviation values and verdicts");
    add_common(deviations);
    deviations->add_option("--tol", config.tolerance, "Classicality tolerance")
        ->check(CLI::NonNegativeNumber);

    auto* fit = app.add_subcommand("fit", "Fit the Fock space model per exemplar");
    add_common(fit);
    add_fit(fit);

    auto* stats = app.add_subcommand("stats", "Statistical battery (bundled data by default)");
    add_common(stats);

    auto* realize = app.add_subcommand("realize", "Explicit Hilbert space vectors per exemplar");
    add_common(realize);
    add_fit(realize);

    auto* sample = app.add_subcommand("sample", "Synthetic raw responses from weights");
    add_common(sample);
    add_fit(sample);
    sample->add_option("--subjects", config.subjects, "Subjects per exemplar")
        ->check(CLI::PositiveNumber);
    sample->add_flag("--from-fit", config.sample_from_fit,
                     "Draw conjunction cells from the fitted model");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    auto* chosen = app.get_subcommands().front();
    if (!input.empty()) config.input_path = input;
    if (!output.empty()) config.output_path = output;
    if (!pair.empty()) config.pair = pair;
    if (chosen->count("--kind") > 0) config.input_kind = kind;

    CommandResult result;
    if (chosen == deviations) result = cmd_deviations(config);
    if (chosen == fit) result = cmd_fit(config);
    if (chosen == stats) result = cmd_stats(config);
    if (chosen == realize) result = cmd_realize(config);
    if (chosen == sample) result = cmd_sample(config);

    err << result.diagnostics;
    if (config.output_path && !result.output.empty()) {
        std::ofstream file(*config.output_path, std::ios::binary);
        if (!(file << result.output)) {
            err << "error: cannot write " << config.output_path->string() << '\n';
            return kExitInput;
        }
    } else {
        out << result.output;
    }
    return result.exit_code;
}

}  // namespace fockbench
