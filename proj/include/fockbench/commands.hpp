#pragma once

// Command implementations behind the fockbench executable. Each command
// renders its report into a string; run() parses arguments and routes the
// result to stdout or --output.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "fockbench/domain.hpp"
#include "fockbench/fockmodel.hpp"

namespace fockbench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;       // parse or data errors
inline constexpr int kExitInfeasible = 3;  // run completed, some exemplars infeasible

enum class InputKind { Raw, Aggregated, Deviations };
enum class OutputFormat { Json, Csv, Table };

struct RunConfig {
    std::optional<std::filesystem::path> input_path;
    std::optional<InputKind> input_kind;  // command default when unset
    double tolerance = 1e-9;
    double fit_tol = 5e-3;
    int budget = 10000;
    std::optional<std::filesystem::path> output_path;
    OutputFormat output_format = OutputFormat::Json;
    std::uint64_t seed = 0;
    int subjects = 40;
    SingleSource single_source = SingleSource::Canonical;
    std::optional<std::string> pair;  // restrict to one concept pair
    bool sample_from_fit = false;

    FitConfig fit_config() const { return {fit_tol, budget, seed}; }
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string output;
    std::string diagnostics;
};

CommandResult cmd_deviations(const RunConfig& config);
CommandResult cmd_fit(const RunConfig& config);
// Without an input path the bundled table data is used.
CommandResult cmd_stats(const RunConfig& config);
CommandResult cmd_realize(const RunConfig& config);
// Always emits raw-response CSV.
CommandResult cmd_sample(const RunConfig& config);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fockbench
