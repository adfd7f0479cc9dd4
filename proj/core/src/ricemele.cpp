#include "kzq/ricemele.hpp"

#include <algorithm>
#include <cmath>

#include "kzq/analytic.hpp"
#include "kzq/errors.hpp"

namespace kzq {

Mat2 bloch_hamiltonian(const RmParams& params, double k) {
    const double ka = k * params.lattice_a;
    const double hx = params.v_hop + params.w_hop * std::cos(ka);
    const double hy = params.w_hop * std::sin(ka);
    const double hz = params.onsite;
    return {cxd{hz, 0.0}, cxd{hx, -hy}, cxd{hx, hy}, cxd{-hz, 0.0}};
}

double map_to_experiment(const RmParams& params, double k) {
    if (params.v_hop != params.w_hop)
        throw domain_error(
            "map_to_experiment: the band-crossing expansion needs the "
            "continuum limit v_hop = w_hop");
    return params.w_hop * (k * params.lattice_a - M_PI);
}

double cutoff_momentum(double quench_rate, double delta_max) {
    if (quench_rate <= 0.0 || delta_max <= 0.0)
        throw domain_error("cutoff_momentum: inputs must be positive");
    const double v_c = delta_max * delta_max;
    return 2.0 * M_PI * std::sqrt(std::min(quench_rate, v_c));
}

MomentumGrid uniform_grid(double p_max, int n_points) {
    if (p_max <= 0.0) throw domain_error("uniform_grid: p_max must be positive");
    if (n_points < 17 || (n_points - 1) % 4 != 0)
        throw domain_error("uniform_grid: need 4k+1 points, k >= 4");
    MomentumGrid g;
    g.p_max = p_max;
    g.n_points = n_points;
    g.p_values.resize(n_points);
    for (int i = 0; i < n_points; ++i)
        g.p_values[i] = p_max * static_cast<double>(i) / (n_points - 1);
    g.p_values.front() = 0.0;
    g.p_values.back() = p_max;
    return g;
}

double collapse_coordinate(double p, double T, double delta_max) {
    return p * std::sqrt(T / delta_max);
}

double momentum_resolved_defect(double p, double delta_max, double T,
                                Engine engine, const IntegratorConfig& cfg) {
    if (p < 0.0) throw domain_error("momentum_resolved_defect: p must be >= 0");
    QubitState fin;
    switch (engine) {
        case Engine::analytic:
            fin = halframp_final_state(p, delta_max, T);
            break;
        case Engine::numeric:
            fin = evolve(TwoLevel{p}, half_ramp(delta_max, T),
                         ramp_initial_state(), cfg)
                      .state;
            break;
        case Engine::tomographic:
            throw domain_error(
                "momentum_resolved_defect: tomographic readout is handled by "
                "the sweep layer");
    }
    const EigenBasis e = eigenbasis(TwoLevel{p}, delta_max);
    return std::norm(inner(e.upper, fin));
}

namespace {

// Composite Simpson over samples at uniform spacing h, stride `step`.
double simpson(const std::vector<MomentumPoint>& pts, std::size_t step, double h) {
    double s = 0.0;
    const std::size_t last = pts.size() - 1;
    for (std::size_t i = 0; i + 2 * step <= last; i += 2 * step)
        s += pts[i].n + 4.0 * pts[i + step].n + pts[i + 2 * step].n;
    return s * (h * step) / 3.0;
}

}  // namespace

SweepResult total_defect_density(double delta_max, double T,
                                 const MomentumGrid& grid, Engine engine,
                                 const IntegratorConfig& cfg) {
    const int n = grid.n_points;
    if (n < 17 || (n - 1) % 4 != 0 ||
        static_cast<int>(grid.p_values.size()) != n)
        throw domain_error("total_defect_density: need a 4k+1-point grid");
    if (grid.p_values.front() != 0.0 || grid.p_values.back() != grid.p_max)
        throw domain_error("total_defect_density: grid must span [0, p_max]");
    const double h = grid.p_max / (n - 1);
    for (int i = 0; i < n; ++i)
        if (std::abs(grid.p_values[i] - i * h) > 1e-9 * grid.p_max)
            throw domain_error("total_defect_density: grid must be uniform");

    SweepResult r;
    r.delta_max = delta_max;
    r.T = T;
    r.tau_q = rm_tau_q(delta_max, T);
    r.source = engine;
    r.per_p.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double p = grid.p_values[i];
        r.per_p.push_back({p, momentum_resolved_defect(p, delta_max, T, engine, cfg)});
    }

    const double full = simpson(r.per_p, 1, h);
    const double half = simpson(r.per_p, 2, h);
    if (std::abs(full - half) >= 1e-3 * std::max(std::abs(full), 1e-300))
        throw accuracy_error("total_defect_density: quadrature not converged",
                             std::abs(full - half) / std::max(std::abs(full), 1e-300));
    r.n_total = full;
    return r;
}

}  // namespace kzq
