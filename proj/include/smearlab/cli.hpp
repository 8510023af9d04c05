#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smearlab/suites.hpp"

namespace smearlab {

enum class OutputFormat { json, csv };

// Every setting a command can read; unused fields keep their defaults.
struct RunConfig {
    std::string command;
    std::vector<std::string> deltas;  // empty: the command's default set
    Backend backend = Backend::floating;
    double tol = kDefaultTolerance;
    std::uint64_t seed = 42;
    std::size_t shots = 100000;
    std::string out;  // empty: standard output
    std::optional<OutputFormat> format;
    bool timing = false;
    // measure
    std::string state = "up_z";
    std::string axes = "z,x";
    // curve
    double alpha = 0;
    double eta = 0;
    double hbar = 1;
    double dx_min = 0.1;
    double dx_max = 10;
    std::size_t samples = 100;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

std::vector<std::string> default_deltas(Backend backend);

// Each command validates its config, writes its document to config.out (or
// `out`), and returns an exit code. Configuration problems throw ConfigError.
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_measure(const RunConfig& config, std::ostream& out);
int cmd_curve(const RunConfig& config, std::ostream& out);
int cmd_report(const RunConfig& config, std::ostream& out);

// Parses argv and dispatches. Returns 0 when every check passed, 1 when any
// failed, 2 on a usage or configuration error (reported on `err`).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smearlab
