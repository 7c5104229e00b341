#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "loguncert/cli/commands.hpp"
#include "loguncert/cli/config.hpp"
#include "loguncert/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "numerical laboratory for logarithmic uncertainty inequalities of "
        "radial profiles"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir, format;
    int dimension = 0, resolution = 0;
    double r_max = 0.0;
    std::uint64_t seed = 0;
    auto* opt_config =
        app.add_option("--config", config_path, "configuration file (key-value text or JSON)");
    auto* opt_dim =
        app.add_option("--dimension", dimension, "ambient dimension d >= 1");
    auto* opt_res =
        app.add_option("--resolution", resolution, "radial grid size");
    auto* opt_rmax = app.add_option("--rmax", r_max, "grid truncation radius");
    auto* opt_seed = app.add_option("--seed", seed, "estimation search seed");
    auto* opt_out = app.add_option("--out", out_dir, "report output directory");
    auto* opt_format = app.add_option("--format", format,
                                      "report files to write: csv, json, both");

    auto* verify = app.add_subcommand(
        "verify", "scan the inequality suite and report slack per trial");
    auto* differentiate = app.add_subcommand(
        "differentiate", "differentiate parametric families at t = 0");
    auto* estimate = app.add_subcommand(
        "estimate", "search a trial family for an empirical constant");
    auto* constants =
        app.add_subcommand("constants", "print closed-form constant tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are configuration errors
    }

    try {
        loguncert::cli::Config cfg;
        if (*opt_config) cfg = loguncert::cli::load_config_file(config_path);
        if (*opt_dim) cfg.grid.dimension = dimension;
        if (*opt_res) cfg.grid.resolution = resolution;
        if (*opt_rmax) cfg.grid.r_max = r_max;
        if (*opt_seed) cfg.estimate.seed = seed;
        if (*opt_out) cfg.out_dir = out_dir;
        if (*opt_format) {
            loguncert::require(
                format == "csv" || format == "json" || format == "both",
                "output format must be csv, json, or both");
            cfg.format = format;
        }
        if (verify->parsed()) return loguncert::cli::cmd_verify(cfg, std::cout);
        if (differentiate->parsed())
            return loguncert::cli::cmd_differentiate(cfg, std::cout);
        if (estimate->parsed())
            return loguncert::cli::cmd_estimate(cfg, std::cout);
        if (constants->parsed())
            return loguncert::cli::cmd_constants(cfg, std::cout);
        std::cout << "no command selected\n";
        return 2;
    } catch (const loguncert::invalid_argument& e) {
        std::cout << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
