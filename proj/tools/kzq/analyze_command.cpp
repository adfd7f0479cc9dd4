#include <chrono>
#include <string>
#include <vector>

#include "kzq/csv.hpp"
#include "kzq/errors.hpp"
#include "kzq/pool.hpp"

#include "commands.hpp"
#include "report.hpp"
#include "runcfg.hpp"

namespace kzqtool {

namespace {

// First present column wins; the numeric column outranks derived ones.
const char* pick_y_column(const kzq::CsvTable& table) {
    for (const char* name :
         {"n_numeric", "n_total", "n_analytic", "n_tomographic", "n"})
        if (table.column_index(name) >= 0) return name;
    return nullptr;
}

}  // namespace

int cmd_analyze(const CommonOpts& opts, const std::string& csv_path) {
    kzq::Config defaults;
    defaults.set("eps_plateau", "0.05");
    const RunSettings rs =
        resolve_settings("analyze", opts, defaults,
                         {"eps_plateau", "window"}, "out/analyze");

    const auto t0 = std::chrono::steady_clock::now();
    const kzq::CsvTable table = kzq::read_csv_file(csv_path);

    // Crossing sweeps carry the dimensionless ratio and want the knee
    // window; ramp sweeps carry tau_q in seconds-per-rate units and a
    // power-law tail.
    std::string x_name;
    kzq::WindowRule rule;
    if (table.column_index("tau_q_over_tau0") >= 0) {
        x_name = "tau_q_over_tau0";
        rule = kzq::WindowRule::knee;
    } else if (table.column_index("tau_q") >= 0) {
        x_name = "tau_q";
        rule = kzq::WindowRule::tail;
    } else {
        throw kzq::config_error(
            "analyze: no abscissa column (need tau_q_over_tau0 or tau_q) in " +
            csv_path);
    }
    if (rs.echo.has("window")) {
        const std::string w = rs.echo.get_string("window");
        if (w == "knee")
            rule = kzq::WindowRule::knee;
        else if (w == "tail")
            rule = kzq::WindowRule::tail;
        else
            throw kzq::config_error("analyze: window must be knee or tail, got '" +
                                    w + "'");
    }

    const char* y_name = pick_y_column(table);
    if (!y_name)
        throw kzq::config_error("analyze: no defect-density column in " + csv_path);

    const int xi = table.column_index(x_name);
    const int yi = table.column_index(y_name);
    const int di = table.column_index("delta_max");

    Curves curves;
    for (const std::vector<double>& row : table.rows) {
        const double key = di >= 0 ? row[di] : 0.0;
        if (curves.empty() || curves.back().first != key)
            curves.push_back({key, {}});
        curves.back().second.push_back({row[xi], row[yi]});
    }
    if (curves.empty())
        throw kzq::insufficient_data_error("analyze: " + csv_path + " has no rows");

    const double eps = rs.echo.get_double("eps_plateau");
    json report = analysis_json(curves, rule, eps, std::nullopt);

    bool any = false;
    for (const json& p : report["plateaus"])
        if (p["found"].get<bool>()) any = true;
    for (const json& a : report["exponents"]["a"])
        if (!a["fit"].is_null()) any = true;
    if (!any)
        throw kzq::insufficient_data_error(
            "analyze: no curve in " + csv_path +
            " yields a plateau or a slow-branch fit");

    kzq::Config echo = rs.echo;
    echo.set("input", csv_path);
    echo.set("x_column", x_name);
    echo.set("y_column", y_name);
    echo.set("window", rule == kzq::WindowRule::knee ? "knee" : "tail");
    report["config"] = config_echo_json(echo);

    kzq::RunManifest manifest(rs.out_dir, tool_version(), echo.echo());
    add_json_file(manifest, "analysis.json", report);
    manifest.finalize();
    manifest.write_run_info(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count(),
        kzq::effective_workers(rs.workers));
    return 0;
}

}  // namespace kzqtool
