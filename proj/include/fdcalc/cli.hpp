#pragma once

#include "fdcalc/verify.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdcalc {

inline constexpr const char* kToolVersion = "1.0.0";

/// Invalid command line or malformed input value; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when the user asks for --help; carries the rendered text.
struct HelpRequested {
    std::string text;
};

struct CliConfig {
    enum class Command { verify, diff, table, newton_series };
    enum class Format { text, json };

    Command command = Command::verify;
    std::optional<Identity> identity;
    std::optional<unsigned> n;
    std::optional<unsigned> n_max;
    std::optional<unsigned> order;
    std::optional<unsigned> points;
    std::optional<unsigned> grid_bound;
    std::optional<std::string> poly_literal_text;
    Format format = Format::text;
    unsigned n_cap = 512;
    bool inject_failure = false;  // test hook for the exit-code contract
};

/// Parses argv (without the program name) into a validated config.
/// Throws UsageError on any malformed or out-of-range input and
/// HelpRequested for --help.
CliConfig parse_args(const std::vector<std::string>& args);

/// Runs both verification routes for one n, plus the numeric grid oracle
/// when a bound is given, merged into a single report.
VerificationReport verify_combined(Identity identity, unsigned n,
                                   std::optional<unsigned> grid_bound,
                                   bool inject_failure = false);

/// Executes the configured command. Reports go to `out`, diagnostics to
/// `err`. Returns the exit code: 0 all verifications passed, 1 at least
/// one verification failed, 2 usage or parse error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Binary entry point: parse + run + error-to-exit-code mapping.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fdcalc
