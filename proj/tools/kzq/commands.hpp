#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace kzqtool {

// Flag values shared by every subcommand. Empty / nullopt means "not given
// on the command line"; each command overlays them onto its config.
struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    std::optional<std::string> engine;
};

int cmd_lz_sweep(const CommonOpts& opts);
int cmd_rm_sweep(const CommonOpts& opts);
int cmd_tomo_sim(const CommonOpts& opts);
int cmd_analyze(const CommonOpts& opts, const std::string& csv_path);
int cmd_reproduce(const CommonOpts& opts, const std::string& figure_id);

}  // namespace kzqtool
