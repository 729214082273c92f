// psdual: map a power-law charge density to its exactly solvable s-wave
// ground-state problem (solve), cross-check the closed forms numerically
// (verify), or dump plot-ready radial profiles (table).
//
// Exit codes: 0 success, 2 invalid input, 3 not a bound state,
// 4 verification failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "psdual/psdual.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotBound = 3;
constexpr int kExitVerifyFailed = 4;

struct Options {
    std::string density;
    double r_min = 1e-6;
    double r_max = 40.0;
    int n = 40000;
    std::string format;
    bool strict_bound = false;
    int max_rows = 2000;
};

void add_common_flags(CLI::App* cmd, Options& opt, const std::string& default_format) {
    opt.format = default_format;
    cmd->add_option("--density", opt.density, "density spec, e.g. \"2/r + 0.3\"")->required();
    cmd->add_option("--rmin", opt.r_min, "inner grid cutoff");
    cmd->add_option("--rmax", opt.r_max, "outer grid radius");
    cmd->add_option("--n", opt.n, "number of grid intervals");
    cmd->add_option("--format", opt.format, "output format");
    cmd->add_flag("--strict-bound", opt.strict_bound, "exit 3 when the state is not bound");
}

void fail_format(const std::string& format, const std::string& command) {
    throw std::invalid_argument("format '" + format + "' is not available for '" + command + "'");
}

int run_solve(const Options& opt) {
    const psdual::ChargeDensity rho = psdual::parse_density(opt.density);
    const psdual::DualSolution sol = psdual::solve_dual(rho);
    if (opt.format == "json") {
        std::cout << psdual::solve_document(rho, sol).dump(2) << "\n";
    } else if (opt.format == "text") {
        std::cout << psdual::solve_text(rho, sol);
    } else {
        fail_format(opt.format, "solve");
    }
    if (opt.strict_bound && !sol.bound) {
        std::cerr << R"({"error":"not_bound","reason":"E0 >= 0"})" << "\n";
        return kExitNotBound;
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    const psdual::ChargeDensity rho = psdual::parse_density(opt.density);
    const psdual::VerificationReport report = psdual::verify(rho, psdual::GridSpec(opt.r_min, opt.r_max, opt.n));
    if (opt.format == "json") {
        std::cout << psdual::verify_document(report).dump(2) << "\n";
    } else if (opt.format == "text") {
        std::cout << psdual::verify_text(report);
    } else {
        fail_format(opt.format, "verify");
    }
    if (report.passed) return kExitOk;
    if (!report.numeric_E0) return kExitNotBound;  // stopped before the numeric checks
    return kExitVerifyFailed;
}

int run_table(const Options& opt) {
    const psdual::ChargeDensity rho = psdual::parse_density(opt.density);
    const psdual::DualSolution sol = psdual::solve_dual(rho);
    if (opt.format != "csv") fail_format(opt.format, "table");
    std::cout << psdual::table_csv(rho, sol, psdual::GridSpec(opt.r_min, opt.r_max, opt.n), opt.max_rows);
    if (opt.strict_bound && !sol.bound) {
        std::cerr << R"({"error":"not_bound","reason":"E0 >= 0"})" << "\n";
        return kExitNotBound;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"electrostatic-to-quantum duality toolkit"};
    app.require_subcommand(1);

    Options solve_opt;
    Options verify_opt;
    Options table_opt;
    CLI::App* solve = app.add_subcommand("solve", "closed-form ground state for a density");
    CLI::App* verify = app.add_subcommand("verify", "cross-check the closed forms numerically");
    CLI::App* table = app.add_subcommand("table", "radial profiles as CSV");
    add_common_flags(solve, solve_opt, "json");
    add_common_flags(verify, verify_opt, "json");
    add_common_flags(table, table_opt, "csv");
    table->add_option("--max-rows", table_opt.max_rows, "row cap for the CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        return run_table(table_opt);
    } catch (const psdual::ParseError& e) {
        std::cerr << R"({"error":")" << e.code() << R"(","offset":)" << e.offset() << R"(,"message":")" << e.what()
                  << R"("})" << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << R"({"error":"invalid_input","message":")" << e.what() << R"("})" << "\n";
        return kExitInvalidInput;
    }
}
