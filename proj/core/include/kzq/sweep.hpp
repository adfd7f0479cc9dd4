#pragma once

#include <cstdint>
#include <vector>

#include "kzq/engine.hpp"
#include "kzq/propagator.hpp"
#include "kzq/ricemele.hpp"

namespace kzq {

// Defect density of one symmetric crossing sweep at dimensionless quench
// time tau_ratio = J^2 T / delta_max, started in the upper eigenstate at
// -delta_max and projected on the lower eigenstate at +delta_max.
// The tomographic engine integrates numerically, then reads the state out
// through the simulated three-basis measurement chain.
double lz_defect(double coupling, double delta_max, double tau_ratio,
                 Engine engine, const IntegratorConfig& cfg = {},
                 std::uint64_t shots = 10000, std::uint64_t seed = 0);

struct LzSweepConfig {
    double coupling = 0.0;
    std::vector<double> delta_max;  // rad/s
    std::vector<double> tau_grid;   // tau_Q / tau_0
    bool tomographic = false;       // adds the readout column
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    int workers = 0;
    IntegratorConfig ode;
};

struct LzRow {
    double delta_max;
    double tau;
    double n_numeric;
    double n_analytic;
    double n_tomographic;  // NaN unless the column was requested
};

// Rows ordered (delta_max index, tau index), independent of scheduling.
// Tomographic seeds derive from the sweep coordinates, never from thread
// identity, so worker count cannot change the data.
std::vector<LzRow> run_lz_sweep(const LzSweepConfig& cfg);

struct RmSweepConfig {
    std::vector<double> delta_max;  // rad/s
    std::vector<double> periods;    // seconds
    int grid_points = 129;
    Engine engine = Engine::analytic;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    int workers = 0;
    IntegratorConfig ode;
};

// One SweepResult per (delta_max, T), ordered by (delta_max index,
// T index). The tomographic engine reuses the numeric evolution per mode
// and replaces the exact projection by the simulated readout; its
// quadrature skips the convergence gate (shot noise, not discretization,
// limits accuracy there).
std::vector<SweepResult> run_rm_sweep(const RmSweepConfig& cfg);

}  // namespace kzq
