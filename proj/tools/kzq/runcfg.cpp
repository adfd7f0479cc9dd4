#include "runcfg.hpp"

#include <algorithm>
#include <cstdio>

#include "kzq/engine.hpp"
#include "kzq/errors.hpp"

namespace kzqtool {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += fmt_double(values[i]);
    }
    out += "]";
    return out;
}

RunSettings resolve_settings(const std::string& command, const CommonOpts& opts,
                             const kzq::Config& defaults,
                             const std::vector<std::string>& allowed_keys,
                             const std::string& default_out) {
    RunSettings rs;
    rs.echo = defaults;
    rs.out_dir = default_out;

    if (!opts.config_path.empty()) {
        const kzq::Config file = kzq::Config::parse_file(opts.config_path);
        for (const auto& [key, value] : file.entries()) {
            if (key == "out") {
                rs.out_dir = value;
            } else if (key == "workers") {
                rs.workers = static_cast<int>(file.get_u64("workers", 0));
            } else if (std::find(allowed_keys.begin(), allowed_keys.end(), key) !=
                       allowed_keys.end()) {
                rs.echo.set(key, value);
            } else {
                throw kzq::config_error(command + ": unknown config key '" + key +
                                        "'");
            }
        }
    }

    if (opts.seed) rs.echo.set("seed", std::to_string(*opts.seed));
    if (opts.engine) rs.echo.set("engine", *opts.engine);
    if (!opts.out_dir.empty()) rs.out_dir = opts.out_dir;
    if (opts.workers) rs.workers = *opts.workers;

    if (rs.echo.has("engine")) kzq::parse_engine(rs.echo.get_string("engine"));
    return rs;
}

}  // namespace kzqtool
