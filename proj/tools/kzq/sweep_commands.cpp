#include <chrono>
#include <cmath>

#include "kzq/csv.hpp"
#include "kzq/engine.hpp"
#include "kzq/pool.hpp"
#include "kzq/ricemele.hpp"
#include "kzq/sweep.hpp"

#include "commands.hpp"
#include "report.hpp"
#include "runcfg.hpp"
#include "sweep_io.hpp"

namespace kzqtool {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> lz_default_deltas() {
    std::vector<double> out;
    for (double f : {25.0, 41.0, 57.0, 78.0, 110.0, 190.0, 440.0})
        out.push_back(kTwoPi * f * 1e3);
    return out;
}

std::vector<double> rm_default_deltas() {
    std::vector<double> out;
    for (double f : {5.25, 6.30, 7.35, 8.40, 9.45, 10.50})
        out.push_back(kTwoPi * f * 1e3);
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

std::string lz_csv(const std::vector<kzq::LzRow>& rows, bool tomographic) {
    std::vector<std::string> cols = {"delta_max", "tau_q_over_tau0", "n_numeric",
                                     "n_analytic"};
    if (tomographic) cols.push_back("n_tomographic");
    kzq::CsvWriter csv(cols);
    for (const kzq::LzRow& r : rows) {
        std::vector<double> v = {r.delta_max, r.tau, r.n_numeric, r.n_analytic};
        if (tomographic) v.push_back(r.n_tomographic);
        csv.row(v);
    }
    return csv.text();
}

std::string rm_total_csv(const std::vector<kzq::SweepResult>& results) {
    kzq::CsvWriter csv({"delta_max", "T_seconds", "tau_q", "n_total"});
    for (const kzq::SweepResult& r : results)
        csv.row({r.delta_max, r.T, r.tau_q, r.n_total});
    return csv.text();
}

std::string rm_momentum_csv(const std::vector<kzq::SweepResult>& results) {
    kzq::CsvWriter csv({"delta_max", "T_seconds", "p", "x_collapse", "n"});
    for (const kzq::SweepResult& r : results)
        for (const kzq::MomentumPoint& mp : r.per_p)
            csv.row({r.delta_max, r.T, mp.p,
                     kzq::collapse_coordinate(mp.p, r.T, r.delta_max), mp.n});
    return csv.text();
}

Curves lz_curves(const std::vector<kzq::LzRow>& rows) {
    Curves out;
    for (const kzq::LzRow& r : rows) {
        if (out.empty() || out.back().first != r.delta_max)
            out.push_back({r.delta_max, {}});
        out.back().second.push_back({r.tau, r.n_numeric});
    }
    return out;
}

Curves rm_curves(const std::vector<kzq::SweepResult>& results) {
    Curves out;
    for (const kzq::SweepResult& r : results) {
        if (out.empty() || out.back().first != r.delta_max)
            out.push_back({r.delta_max, {}});
        out.back().second.push_back({r.tau_q, r.n_total});
    }
    return out;
}

int cmd_lz_sweep(const CommonOpts& opts) {
    kzq::Config defaults;
    defaults.set("coupling", fmt_double(kTwoPi * 31.75e3));
    defaults.set("delta_max", fmt_list(lz_default_deltas()));
    defaults.set("tau_grid", "geom(0.015625, 16, 33)");
    defaults.set("engine", "numeric");
    defaults.set("shots", "10000");
    defaults.set("seed", "0");
    defaults.set("rel_tol", "1e-10");
    defaults.set("abs_tol", "1e-12");
    defaults.set("eps_plateau", "0.05");
    const RunSettings rs = resolve_settings(
        "lz-sweep", opts, defaults,
        {"coupling", "delta_max", "tau_grid", "engine", "shots", "seed",
         "rel_tol", "abs_tol", "eps_plateau"},
        "out/lz-sweep");

    kzq::LzSweepConfig cfg;
    cfg.coupling = rs.echo.get_double("coupling");
    cfg.delta_max = rs.echo.get_list("delta_max");
    cfg.tau_grid = rs.echo.get_list("tau_grid");
    cfg.tomographic =
        kzq::parse_engine(rs.echo.get_string("engine")) == kzq::Engine::tomographic;
    cfg.shots = rs.echo.get_u64("shots", 10000);
    cfg.seed = rs.echo.get_u64("seed", 0);
    cfg.workers = rs.workers;
    cfg.ode.rel_tol = rs.echo.get_double("rel_tol");
    cfg.ode.abs_tol = rs.echo.get_double("abs_tol");

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<kzq::LzRow> rows = kzq::run_lz_sweep(cfg);

    kzq::RunManifest manifest(rs.out_dir, tool_version(), rs.echo.echo());
    manifest.add_file("lz_sweep.csv", lz_csv(rows, cfg.tomographic));
    if (cfg.tau_grid.size() >= 2) {
        json report = analysis_json(lz_curves(rows), kzq::WindowRule::knee,
                                    rs.echo.get_double("eps_plateau"),
                                    cfg.coupling);
        report["config"] = config_echo_json(rs.echo);
        add_json_file(manifest, "analysis.json", report);
    }
    manifest.finalize();
    manifest.write_run_info(seconds_since(t0), kzq::effective_workers(rs.workers));
    return 0;
}

int cmd_rm_sweep(const CommonOpts& opts) {
    const std::vector<double> deltas = rm_default_deltas();
    kzq::Config defaults;
    defaults.set("delta_max", fmt_list(deltas));
    defaults.set("periods",
                 "geom(" + fmt_double(std::pow(2.0, -5.0) / deltas.back()) + ", " +
                     fmt_double(std::pow(2.0, 7.0) / deltas.front()) + ", 27)");
    defaults.set("grid_points", "129");
    defaults.set("engine", "analytic");
    defaults.set("shots", "10000");
    defaults.set("seed", "0");
    defaults.set("rel_tol", "1e-10");
    defaults.set("abs_tol", "1e-12");
    defaults.set("eps_plateau", "0.05");
    const RunSettings rs = resolve_settings(
        "rm-sweep", opts, defaults,
        {"delta_max", "periods", "grid_points", "engine", "shots", "seed",
         "rel_tol", "abs_tol", "eps_plateau"},
        "out/rm-sweep");

    kzq::RmSweepConfig cfg;
    cfg.delta_max = rs.echo.get_list("delta_max");
    cfg.periods = rs.echo.get_list("periods");
    cfg.grid_points = rs.echo.get_int("grid_points", 129);
    cfg.engine = kzq::parse_engine(rs.echo.get_string("engine"));
    cfg.shots = rs.echo.get_u64("shots", 10000);
    cfg.seed = rs.echo.get_u64("seed", 0);
    cfg.workers = rs.workers;
    cfg.ode.rel_tol = rs.echo.get_double("rel_tol");
    cfg.ode.abs_tol = rs.echo.get_double("abs_tol");

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<kzq::SweepResult> results = kzq::run_rm_sweep(cfg);

    kzq::RunManifest manifest(rs.out_dir, tool_version(), rs.echo.echo());
    manifest.add_file("rm_total.csv", rm_total_csv(results));
    manifest.add_file("rm_momentum.csv", rm_momentum_csv(results));
    if (cfg.periods.size() >= 2) {
        json report = analysis_json(rm_curves(results), kzq::WindowRule::tail,
                                    rs.echo.get_double("eps_plateau"),
                                    std::nullopt);
        report["config"] = config_echo_json(rs.echo);
        add_json_file(manifest, "analysis.json", report);
    }
    manifest.finalize();
    manifest.write_run_info(seconds_since(t0), kzq::effective_workers(rs.workers));
    return 0;
}

}  // namespace kzqtool
