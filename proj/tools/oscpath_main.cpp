// Command-line front end for the osculating-path counting engines.
//
//   oscpath ct --n 4              counting polynomial via the constant-term sum
//   oscpath dp --n 4              via the transfer recursion
//   oscpath brute --n 2 --t 4     via exhaustive path enumeration (small cases)
//   oscpath verify --n 3          run all engines and cross-check
//   oscpath table                 the default family R_4 ... R_10
//
// Exit codes: 0 success, 1 usage, 2 invalid instance or settings,
// 3 cross-check mismatch, 4 budget exhausted.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oscpath/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact counting of osculating lattice-path ensembles"};
    app.require_subcommand(1);

    oscpath::RunConfig cfg;
    std::string ystart_text, yend_text;

    auto add_instance_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n", cfg.n, "number of walkers (1..8)");
        cmd->add_option("--t", cfg.t, "number of time steps (default 2n)");
        cmd->add_option("--ystart", ystart_text,
                        "comma-separated start heights (default 0,2,..,2(n-1))");
        cmd->add_option("--yend", yend_text, "comma-separated end heights (same default)");
        cmd->add_option("--budget-seconds", cfg.budget_seconds,
                        "abort with exit code 4 once this much time has passed");
        cmd->add_option("--format", cfg.format, "output format: text or json");
    };
    auto add_engine_flags = [&](CLI::App* cmd) {
        cmd->add_option("--window", cfg.window, "per-variable exponent window (default: safe bound)");
        cmd->add_option("--omega-cap", cfg.omega_cap, "contact-grading cap (default: degree bound)");
        cmd->add_option("--threads", cfg.threads, "worker threads (default: hardware)");
        cmd->add_option("--eval-omega", cfg.eval_omega,
                        "also evaluate the polynomial at this rational contact weight");
    };

    CLI::App* ct = app.add_subcommand("ct", "constant-term engine");
    add_instance_flags(ct);
    add_engine_flags(ct);
    CLI::App* dp = app.add_subcommand("dp", "transfer-recursion engine");
    add_instance_flags(dp);
    dp->add_option("--eval-omega", cfg.eval_omega,
                   "also evaluate the polynomial at this rational contact weight");
    CLI::App* brute = app.add_subcommand("brute", "exhaustive enumeration (n*t <= 24)");
    add_instance_flags(brute);
    brute->add_option("--eval-omega", cfg.eval_omega,
                      "also evaluate the polynomial at this rational contact weight");
    CLI::App* verify = app.add_subcommand("verify", "cross-check all engines");
    add_instance_flags(verify);
    add_engine_flags(verify);
    CLI::App* table = app.add_subcommand("table", "default family R_4 .. R_10");
    table->add_option("--format", cfg.format, "output format: text or json");
    table->add_option("--threads", cfg.threads, "worker threads (default: hardware)");
    table->add_option("--budget-seconds", cfg.budget_seconds,
                      "abort with exit code 4 once this much time has passed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return oscpath::kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (!ystart_text.empty()) cfg.y_start = oscpath::parse_heights(ystart_text);
        if (!yend_text.empty()) cfg.y_end = oscpath::parse_heights(yend_text);
    } catch (const oscpath::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return oscpath::kExitUsage;
    }
    return oscpath::run(cfg, std::cout, std::cerr);
}
