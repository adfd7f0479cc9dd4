#pragma once

#include <string>
#include <vector>

#include "kzq/config.hpp"

#include "commands.hpp"

namespace kzqtool {

// Effective run settings: the canonical config echo plus the two execution
// placement knobs. `out` and `workers` stay out of the echo on purpose, so
// the emitted files are byte-identical no matter where a run writes or how
// many threads it uses.
struct RunSettings {
    kzq::Config echo;
    std::string out_dir;
    int workers = 0;  // 0 = one per logical core
};

std::string fmt_double(double v);
std::string fmt_list(const std::vector<double>& values);

// Overlays, in order: command defaults, the config file, command-line
// flags. Unknown config keys are rejected by name; `out` and `workers`
// are accepted in the file but routed past the echo.
RunSettings resolve_settings(const std::string& command, const CommonOpts& opts,
                             const kzq::Config& defaults,
                             const std::vector<std::string>& allowed_keys,
                             const std::string& default_out);

}  // namespace kzqtool
