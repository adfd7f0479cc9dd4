#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "kzq/errors.hpp"

#include "commands.hpp"

namespace {

using kzqtool::CommonOpts;

void add_placement_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--seed", opts.seed, "Base RNG seed");
    cmd->add_option("--workers", opts.workers,
                    "Worker threads (default: one per logical core)");
}

void add_config_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path,
                    "Run configuration file (key = value lines)")
        ->check(CLI::ExistingFile);
}

void add_engine_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--engine", opts.engine,
                    "Defect-density engine: numeric | analytic | tomographic");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quench sweeps, readout simulation, and scaling-law extraction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("kzq ") + KZQ_TOOL_VERSION);

    std::function<int()> run;

    CommonOpts lz_opts;
    CLI::App* lz = app.add_subcommand(
        "lz-sweep", "Crossing sweep: defect density over quench ranges and rates");
    add_config_flag(lz, lz_opts);
    add_placement_flags(lz, lz_opts);
    add_engine_flag(lz, lz_opts);
    lz->callback([&] { run = [&] { return kzqtool::cmd_lz_sweep(lz_opts); }; });

    CommonOpts rm_opts;
    CLI::App* rm = app.add_subcommand(
        "rm-sweep",
        "Lattice ramp sweep: momentum-resolved and total defect densities");
    add_config_flag(rm, rm_opts);
    add_placement_flags(rm, rm_opts);
    add_engine_flag(rm, rm_opts);
    rm->callback([&] { run = [&] { return kzqtool::cmd_rm_sweep(rm_opts); }; });

    CommonOpts tomo_opts;
    CLI::App* tomo = app.add_subcommand(
        "tomo-sim", "Readout-chain study: reconstruction error vs shot count");
    add_config_flag(tomo, tomo_opts);
    add_placement_flags(tomo, tomo_opts);
    tomo->callback(
        [&] { run = [&] { return kzqtool::cmd_tomo_sim(tomo_opts); }; });

    CommonOpts an_opts;
    std::string an_csv;
    CLI::App* an = app.add_subcommand(
        "analyze", "Extract plateaus, critical points, and exponents from a CSV");
    an->add_option("csv", an_csv, "Sweep CSV to analyze")
        ->required()
        ->check(CLI::ExistingFile);
    add_config_flag(an, an_opts);
    add_placement_flags(an, an_opts);
    an->callback(
        [&] { run = [&] { return kzqtool::cmd_analyze(an_opts, an_csv); }; });

    CommonOpts rep_opts;
    std::string rep_id;
    CLI::App* rep = app.add_subcommand(
        "reproduce", "Run a canned figure configuration and its analysis");
    rep->add_option("figure", rep_id,
                    "fig2a | fig2b | fig3b | fig3c | figS2 | figS3 | figS4 | figS5")
        ->required();
    add_placement_flags(rep, rep_opts);
    rep->callback(
        [&] { run = [&] { return kzqtool::cmd_reproduce(rep_opts, rep_id); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run ? run() : 0;
    } catch (const kzq::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const kzq::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const kzq::insufficient_data_error& e) {
        std::fprintf(stderr, "insufficient data: %s\n", e.what());
        return 4;
    } catch (const kzq::accuracy_error& e) {
        std::fprintf(stderr, "accuracy failure: %s\n", e.what());
        return 3;
    } catch (const kzq::stiffness_error& e) {
        std::fprintf(stderr, "integration failure: %s\n", e.what());
        return 3;
    } catch (const kzq::error& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
