#include "kzq/sweep.hpp"

#include <cmath>
#include <limits>

#include "kzq/analytic.hpp"
#include "kzq/errors.hpp"
#include "kzq/pool.hpp"
#include "kzq/rng.hpp"
#include "kzq/tomography.hpp"

namespace kzq {

namespace {

QubitState lz_final_numeric(double J, double delta_max, double T,
                            const IntegratorConfig& cfg) {
    const TwoLevel h{J};
    const QubitState start = eigenbasis(h, -delta_max).upper;
    return evolve(h, symmetric_ramp(delta_max, T), start, cfg).state;
}

}  // namespace

double lz_defect(double coupling, double delta_max, double tau_ratio,
                 Engine engine, const IntegratorConfig& cfg,
                 std::uint64_t shots, std::uint64_t seed) {
    const double T = lz_period_for_tau(coupling, delta_max, tau_ratio);
    const TwoLevel h{coupling};
    switch (engine) {
        case Engine::analytic:
            return lz_defect_analytic(coupling, delta_max, T);
        case Engine::numeric:
            return defect_density(lz_final_numeric(coupling, delta_max, T, cfg),
                                  h, delta_max);
        case Engine::tomographic: {
            const QubitState fin = lz_final_numeric(coupling, delta_max, T, cfg);
            const QubitState target = eigenbasis(h, delta_max).lower;
            return tomographic_defect(fin, target, ShotConfig{shots, seed});
        }
    }
    throw domain_error("lz_defect: bad engine");
}

std::vector<LzRow> run_lz_sweep(const LzSweepConfig& cfg) {
    if (cfg.coupling <= 0.0) throw config_error("lz sweep: coupling must be positive");
    if (cfg.delta_max.empty() || cfg.tau_grid.empty())
        throw config_error("lz sweep: delta_max and tau_grid must be non-empty");
    for (double d : cfg.delta_max)
        if (d <= 0.0) throw config_error("lz sweep: delta_max entries must be positive");
    for (double t : cfg.tau_grid)
        if (t <= 0.0) throw config_error("lz sweep: tau_grid entries must be positive");

    const std::size_t nd = cfg.delta_max.size();
    const std::size_t nt = cfg.tau_grid.size();
    std::vector<LzRow> rows(nd * nt);
    parallel_for(nd * nt, cfg.workers, [&](std::size_t idx) {
        const std::size_t i = idx / nt;
        const std::size_t j = idx % nt;
        const double dm = cfg.delta_max[i];
        const double tau = cfg.tau_grid[j];
        LzRow& r = rows[idx];
        r.delta_max = dm;
        r.tau = tau;
        r.n_numeric = lz_defect(cfg.coupling, dm, tau, Engine::numeric, cfg.ode);
        r.n_analytic = lz_defect(cfg.coupling, dm, tau, Engine::analytic);
        if (cfg.tomographic) {
            const std::uint64_t pt_seed = mix_stream(mix_stream(cfg.seed, i), j);
            r.n_tomographic = lz_defect(cfg.coupling, dm, tau, Engine::tomographic,
                                        cfg.ode, cfg.shots, pt_seed);
        } else {
            r.n_tomographic = std::numeric_limits<double>::quiet_NaN();
        }
    });
    return rows;
}

namespace {

SweepResult rm_point_tomographic(double delta_max, double T,
                                 const MomentumGrid& grid, std::uint64_t shots,
                                 std::uint64_t seed, const IntegratorConfig& cfg) {
    SweepResult r;
    r.delta_max = delta_max;
    r.T = T;
    r.tau_q = rm_tau_q(delta_max, T);
    r.source = Engine::tomographic;
    r.per_p.reserve(grid.p_values.size());
    for (std::size_t k = 0; k < grid.p_values.size(); ++k) {
        const double p = grid.p_values[k];
        const QubitState fin =
            evolve(TwoLevel{p}, half_ramp(delta_max, T), ramp_initial_state(), cfg)
                .state;
        const QubitState target = eigenbasis(TwoLevel{p}, delta_max).upper;
        const double n =
            tomographic_defect(fin, target, ShotConfig{shots, mix_stream(seed, k)});
        r.per_p.push_back({p, n});
    }
    const double h = grid.p_max / (grid.n_points - 1);
    double s = 0.0;
    for (std::size_t i = 0; i + 2 < r.per_p.size(); i += 2)
        s += r.per_p[i].n + 4.0 * r.per_p[i + 1].n + r.per_p[i + 2].n;
    r.n_total = s * h / 3.0;
    return r;
}

}  // namespace

std::vector<SweepResult> run_rm_sweep(const RmSweepConfig& cfg) {
    if (cfg.delta_max.empty() || cfg.periods.empty())
        throw config_error("rm sweep: delta_max and periods must be non-empty");
    for (double d : cfg.delta_max)
        if (d <= 0.0) throw config_error("rm sweep: delta_max entries must be positive");
    for (double t : cfg.periods)
        if (t <= 0.0) throw config_error("rm sweep: period entries must be positive");

    const std::size_t nd = cfg.delta_max.size();
    const std::size_t nt = cfg.periods.size();
    std::vector<SweepResult> results(nd * nt);
    parallel_for(nd * nt, cfg.workers, [&](std::size_t idx) {
        const std::size_t i = idx / nt;
        const std::size_t j = idx % nt;
        const double dm = cfg.delta_max[i];
        const double T = cfg.periods[j];
        const MomentumGrid grid =
            uniform_grid(cutoff_momentum(dm / T, dm), cfg.grid_points);
        if (cfg.engine == Engine::tomographic) {
            const std::uint64_t pt_seed = mix_stream(mix_stream(cfg.seed, i), j);
            results[idx] =
                rm_point_tomographic(dm, T, grid, cfg.shots, pt_seed, cfg.ode);
        } else {
            results[idx] = total_defect_density(dm, T, grid, cfg.engine, cfg.ode);
        }
    });
    return results;
}

}  // namespace kzq
