#include <chrono>
#include <cmath>
#include <vector>

#include "kzq/analysis.hpp"
#include "kzq/csv.hpp"
#include "kzq/errors.hpp"
#include "kzq/pool.hpp"
#include "kzq/rng.hpp"
#include "kzq/tomography.hpp"

#include "commands.hpp"
#include "report.hpp"
#include "runcfg.hpp"

namespace kzqtool {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double gaussian(kzq::SplitMix64& rng) {
    const double u1 = std::max(rng.next_double(), 0x1p-1022);
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

kzq::QubitState random_state(kzq::SplitMix64& rng) {
    kzq::QubitState s{kzq::cxd{gaussian(rng), gaussian(rng)},
                      kzq::cxd{gaussian(rng), gaussian(rng)}};
    const double norm = std::sqrt(s.norm2());
    s.alpha /= norm;
    s.beta /= norm;
    return s;
}

json state_entry(const kzq::cxd& v) { return json::array({v.real(), v.imag()}); }

}  // namespace

int cmd_tomo_sim(const CommonOpts& opts) {
    kzq::Config defaults;
    defaults.set("shots_grid", "[100, 1000, 10000, 100000]");
    defaults.set("trials", "200");
    defaults.set("seed", "0");
    const RunSettings rs =
        resolve_settings("tomo-sim", opts, defaults,
                         {"shots_grid", "trials", "seed"}, "out/tomo-sim");

    const std::vector<double> shots_grid = rs.echo.get_list("shots_grid");
    const int trials = rs.echo.get_int("trials", 200);
    const std::uint64_t seed = rs.echo.get_u64("seed", 0);
    if (trials < 2) throw kzq::config_error("tomo-sim: trials must be >= 2");
    for (double s : shots_grid)
        if (s < 1.0) throw kzq::config_error("tomo-sim: shots_grid entries must be >= 1");

    const auto t0 = std::chrono::steady_clock::now();

    // err[si][t] = n_readout - n_exact for an independent random state and
    // target; streams keyed by (shots index, trial), so worker count and
    // scheduling cannot move a single draw.
    std::vector<std::vector<double>> err(shots_grid.size(),
                                         std::vector<double>(trials));
    kzq::parallel_for(
        shots_grid.size() * trials, rs.workers, [&](std::size_t idx) {
            const std::size_t si = idx / trials;
            const std::size_t t = idx % trials;
            const std::uint64_t stream =
                kzq::mix_stream(kzq::mix_stream(seed, si), t);
            kzq::SplitMix64 rng(stream);
            const kzq::QubitState psi = random_state(rng);
            const kzq::QubitState target = random_state(rng);
            const double exact = std::norm(kzq::inner(target, psi));
            const auto shots = static_cast<std::uint64_t>(shots_grid[si]);
            const double estimate = kzq::tomographic_defect(
                psi, target, kzq::ShotConfig{shots, kzq::mix_stream(stream, 1)});
            err[si][t] = estimate - exact;
        });

    kzq::CsvWriter csv({"shots", "rms_error", "mean_abs_error", "trials"});
    std::vector<kzq::DataPoint> scaling;
    for (std::size_t si = 0; si < shots_grid.size(); ++si) {
        double sq = 0.0, ab = 0.0;
        for (double e : err[si]) {
            sq += e * e;
            ab += std::abs(e);
        }
        const double rms = std::sqrt(sq / trials);
        csv.row({shots_grid[si], rms, ab / trials, double(trials)});
        scaling.push_back({shots_grid[si], rms});
    }

    json report;
    if (scaling.size() >= 3) {
        const kzq::PowerLawFit fit = kzq::fit_power_law(scaling);
        report["shot_scaling"] = fit_json(fit);
    } else {
        report["shot_scaling"] = nullptr;
    }

    // One worked reconstruction at the largest shot count, so the full
    // readout chain is inspectable file-side.
    {
        const std::size_t si = shots_grid.size() - 1;
        const std::uint64_t stream = kzq::mix_stream(kzq::mix_stream(seed, si), 0);
        kzq::SplitMix64 rng(stream);
        const kzq::QubitState psi = random_state(rng);
        const auto shots = static_cast<std::uint64_t>(shots_grid[si]);
        const kzq::ShotConfig sc{shots, kzq::mix_stream(stream, 1)};
        const kzq::StokesVector sv = kzq::measure_stokes(psi, sc);
        const kzq::DensityMatrix rho =
            kzq::project_physical(kzq::density_from_stokes(sv));
        json r;
        r["stokes"] = json::array({sv.s0, sv.s1, sv.s2, sv.s3});
        r["rho"] = json::object();
        r["rho"]["m00"] = state_entry(rho.m00);
        r["rho"]["m01"] = state_entry(rho.m01);
        r["rho"]["m10"] = state_entry(rho.m10);
        r["rho"]["m11"] = state_entry(rho.m11);
        r["shots"] = shots;
        r["seed"] = sc.rng_seed;
        report["reconstruction_example"] = std::move(r);
    }
    report["config"] = config_echo_json(rs.echo);

    kzq::RunManifest manifest(rs.out_dir, tool_version(), rs.echo.echo());
    manifest.add_file("tomo_scaling.csv", csv.text());
    add_json_file(manifest, "analysis.json", report);
    manifest.finalize();
    manifest.write_run_info(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count(),
        kzq::effective_workers(rs.workers));
    return 0;
}

}  // namespace kzqtool
