#include "fdcalc/cli.hpp"

#include "fdcalc/difference.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <utility>

namespace fdcalc {

namespace {

void check_cap(const char* flag, const std::optional<unsigned>& value, unsigned cap) {
    if (value && *value > cap) {
        throw UsageError(std::string(flag) + " value " + std::to_string(*value) +
                         " exceeds the cap of " + std::to_string(cap));
    }
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : report.steps()) {
        steps.push_back({{"id", step.id},
                         {"description", step.description},
                         {"passed", step.passed}});
    }
    nlohmann::json j;
    j["identity"] = report.identity();
    j["n"] = report.n();
    j["steps"] = std::move(steps);
    j["theta"] = report.theta() ? nlohmann::json(report.theta()->to_string())
                                : nlohmann::json(nullptr);
    j["overall"] = report.overall();
    return j;
}

void render_text(const VerificationReport& report, std::ostream& out) {
    out << (report.overall() ? "[PASS]" : "[FAIL]") << " identity=" << report.identity()
        << " n=" << report.n() << " steps=" << report.steps().size();
    if (report.theta()) {
        out << " theta=" << report.theta()->to_string();
    }
    out << "\n";
    for (const auto& step : report.steps()) {
        if (!step.passed) {
            out << "  [FAIL] step " << step.id << ": " << step.description << "\n";
        }
    }
}

std::string join_rationals(const std::vector<Rational>& values) {
    if (values.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += values[i].to_string();
    }
    return out;
}

int run_verify(const CliConfig& config, std::ostream& out) {
    const Identity identity = *config.identity;
    const unsigned first = config.n ? *config.n : 0;
    const unsigned last = config.n ? *config.n : *config.n_max;

    std::vector<VerificationReport> reports;
    reports.reserve(last - first + 1);
    for (unsigned n = first; n <= last; ++n) {
        reports.push_back(verify_combined(identity, n, config.grid_bound, config.inject_failure));
    }

    bool all_passed = true;
    for (const auto& report : reports) {
        all_passed = all_passed && report.overall();
    }

    if (config.format == CliConfig::Format::json) {
        nlohmann::json j;
        j["tool-version"] = kToolVersion;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& report : reports) {
            arr.push_back(report_to_json(report));
        }
        j["reports"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& report : reports) {
            render_text(report, out);
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
    CliConfig config;

    CLI::App app{"Exact finite-difference calculus and binomial identity verification", "fdcalc"};
    app.require_subcommand(1);

    std::string identity_str;
    std::string format_str = "text";
    std::string poly_str;

    auto* verify = app.add_subcommand(
        "verify", "Replay an identity verification and report every proof step");
    verify->add_option("identity", identity_str, "Identity to verify: binomial | chu-vandermonde")
        ->required()
        ->check(CLI::IsMember({"binomial", "chu-vandermonde"}));
    verify->add_option("--n", config.n, "Verify a single order n");
    verify->add_option("--n-max", config.n_max, "Verify every order n in 0..n-max");
    verify->add_option("--grid-bound", config.grid_bound,
                       "Also run the numeric grid oracle over [-B,B] integer points");
    verify->add_option("--format", format_str, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--n-cap", config.n_cap, "Upper bound accepted for any order (default 512)");
    verify->add_flag("--inject-failure", config.inject_failure)->group("");

    auto* diff = app.add_subcommand("diff", "Apply the forward difference operator to a polynomial");
    diff->add_option("--order", config.order, "Difference order to apply")->required();
    diff->add_option("--poly", poly_str, "Polynomial literal (ascending coefficients)")->required();

    auto* table = app.add_subcommand("table", "Print the forward-difference triangle of a polynomial");
    table->add_option("--poly", poly_str, "Polynomial literal (ascending coefficients)")->required();
    table->add_option("--points", config.points, "Number of samples taken at 0,1,...")->required();

    auto* series = app.add_subcommand(
        "newton-series", "Expand a polynomial in the binomial basis and rebuild it");
    series->add_option("--poly", poly_str, "Polynomial literal (ascending coefficients)")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("fdcalc");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        throw HelpRequested{parsed.empty() ? app.help() : parsed.front()->help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (verify->parsed()) {
        config.command = CliConfig::Command::verify;
        config.identity = identity_str == "binomial" ? Identity::binomial : Identity::chu_vandermonde;
        config.format = format_str == "json" ? CliConfig::Format::json : CliConfig::Format::text;
        if (config.n.has_value() == config.n_max.has_value()) {
            throw UsageError("verify requires exactly one of --n or --n-max");
        }
        check_cap("--n", config.n, config.n_cap);
        check_cap("--n-max", config.n_max, config.n_cap);
        check_cap("--grid-bound", config.grid_bound, config.n_cap);
        if (config.grid_bound && *config.grid_bound == 0) {
            throw UsageError("--grid-bound must be >= 1");
        }
    } else if (diff->parsed()) {
        config.command = CliConfig::Command::diff;
        config.poly_literal_text = poly_str;
        check_cap("--order", config.order, config.n_cap);
    } else if (table->parsed()) {
        config.command = CliConfig::Command::table;
        config.poly_literal_text = poly_str;
        check_cap("--points", config.points, config.n_cap);
        if (config.points && *config.points == 0) {
            throw UsageError("--points must be >= 1");
        }
    } else {
        config.command = CliConfig::Command::newton_series;
        config.poly_literal_text = poly_str;
    }
    return config;
}

VerificationReport verify_combined(Identity identity, unsigned n,
                                   std::optional<unsigned> grid_bound, bool inject_failure) {
    VerificationReport combined(identity_name(identity), n);
    if (identity == Identity::binomial) {
        combined.absorb(verify_binomial_direct(n), "direct/");
        combined.absorb(verify_binomial_via_differences(n), "diff/");
    } else {
        combined.absorb(verify_chu_vandermonde_direct(n), "direct/");
        combined.absorb(verify_chu_vandermonde_proof(n), "proof/");
    }
    if (grid_bound) {
        combined.absorb(numeric_grid_check(identity, n, *grid_bound), "grid/");
    }
    if (inject_failure) {
        combined.add_step("injected-failure", "test hook: deliberately corrupted verifier step",
                          false);
    }
    return combined;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case CliConfig::Command::verify:
                return run_verify(config, out);
            case CliConfig::Command::diff: {
                const Polynomial p = parse_poly_literal(*config.poly_literal_text);
                out << poly_literal(delta_n_repeated(p, *config.order)) << "\n";
                return 0;
            }
            case CliConfig::Command::table: {
                const Polynomial p = parse_poly_literal(*config.poly_literal_text);
                std::vector<Rational> values(*config.points);
                for (unsigned j = 0; j < *config.points; ++j) {
                    values[j] = eval(p, Rational(j));
                }
                const DifferenceTable table = difference_table(values);
                for (const auto& row : table.rows()) {
                    out << join_rationals(row) << "\n";
                }
                return 0;
            }
            case CliConfig::Command::newton_series: {
                const Polynomial p = parse_poly_literal(*config.poly_literal_text);
                out << "basis: " << join_rationals(to_binomial_basis(p)) << "\n";
                out << "reconstruction: " << poly_literal(newton_series(p)) << "\n";
                return 0;
            }
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
    try {
        return run(parse_args(args), out, err);
    } catch (const HelpRequested& help) {
        out << help.text;
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fdcalc
