#pragma once

#include <vector>

#include "kzq/engine.hpp"
#include "kzq/hamiltonian.hpp"
#include "kzq/mat2.hpp"
#include "kzq/propagator.hpp"

namespace kzq {

// Two-band chain with staggered hopping and a staggered onsite potential.
struct RmParams {
    double v_hop;        // intracell hopping
    double w_hop;        // intercell hopping
    double lattice_a = 1.0;
    double onsite = 0.0;  // staggered potential u at the evaluation instant
};

// (v + w cos ka) sx + (w sin ka) sy + u sz at Bloch momentum k.
Mat2 bloch_hamiltonian(const RmParams& params, double k);

// Synthetic momentum p = w (k a - pi) of the band-crossing expansion.
// Requires the continuum limit v_hop = w_hop; the mode at p then evolves
// under the two-level crossing Hamiltonian with coupling p and the
// ramp-from-zero detuning schedule.
double map_to_experiment(const RmParams& params, double k);

// Both-branch cutoff: 2 pi sqrt(v) while v < v_c = delta_max^2, saturating
// at 2 pi delta_max beyond. Continuous at the boundary.
double cutoff_momentum(double quench_rate, double delta_max);

struct MomentumGrid {
    std::vector<double> p_values;  // ascending, endpoints 0 and p_max included
    double p_max = 0.0;
    int n_points = 0;
};

// Uniform grid with 4k+1 points, so quadrature convergence can be checked
// against the half-resolution grid without extra dynamics runs.
MomentumGrid uniform_grid(double p_max, int n_points = 129);

// p sqrt(T / delta_max): the coordinate in which slow-quench n(p) curves
// collapse onto one shape.
double collapse_coordinate(double p, double T, double delta_max);

// Excitation probability of the mode at momentum p after the detuning ramp
// 0 -> delta_max over [0, T], starting from the ground state at t = 0.
// Engine selects ODE integration or the exact solution; the tomographic
// readout path lives in the sweep layer.
double momentum_resolved_defect(double p, double delta_max, double T,
                                Engine engine, const IntegratorConfig& cfg = {});

struct MomentumPoint {
    double p;
    double n;
};

struct SweepResult {
    double delta_max = 0.0;
    double T = 0.0;
    double tau_q = 0.0;  // T / delta_max
    double n_total = 0.0;
    std::vector<MomentumPoint> per_p;
    Engine source = Engine::numeric;
};

// Composite-Simpson total over the grid. Throws accuracy_error if the
// half-resolution result differs by 0.1% or more (quadrature not converged).
SweepResult total_defect_density(double delta_max, double T,
                                 const MomentumGrid& grid, Engine engine,
                                 const IntegratorConfig& cfg = {});

}  // namespace kzq
