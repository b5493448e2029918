#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace elnet::cli {

enum class OutputFormat { Json, Csv };

struct CliConfig {
    std::string subcommand;
    std::string input = "-";
    OutputFormat format = OutputFormat::Json;
    std::uint64_t seed = 0;
    std::uint64_t trials = 100'000;
    double tolerance = 1e-9;
    std::uint64_t step_cap = 10'000'000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Result documents go to
/// `out`, diagnostics to `err`; `in` backs the `-` input path.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace elnet::cli
