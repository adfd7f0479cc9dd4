#pragma once

#include "kzq/hamiltonian.hpp"
#include "kzq/pcf.hpp"

namespace kzq {

// delta / 2J; applied to delta_max this is the dimensionless range x_c.
inline double relative_detuning(double delta, double coupling) {
    return delta / (2.0 * coupling);
}

// x_c^2 / (1 + x_c^2): the saturation value of the defect density once the
// quench is faster than every relaxation scale in the sweep.
double plateau_prediction(double x_c);

// exp(-2 pi xi), xi = gap^2 / (4 v): single-crossing diabatic survival.
double lz_probability(double gap, double velocity);

// Dimensionless critical quench time tau_{Q,c}/tau_0 at which the scaling
// regime hands over to the saturation plateau:
//   (1/alpha) / (x_c sqrt(1 + x_c^2)).
double critical_quench_time(double coupling, double delta_max, double alpha_fit);

// Freezing time at sweep velocity v:
//   ( -2J^2/v^2 + sqrt(4 J^4 alpha^4 + v^2 alpha^2) / (v^2 alpha^2) )^{1/2}.
// Throws domain_error if the radicand is negative (reported, not clamped).
double freezing_time_kz(double velocity, double coupling, double alpha_fit);

// Derived timescales of the crossing at one (J, delta_max, alpha).
struct KzTimescales {
    double tau0;      // 1 / 2J
    double tau_c;     // tau0 / sqrt(1 + x_c^2)
    double t_hat_c;   // tau_c / alpha
    double v_c;       // alpha * delta_max * sqrt(4 J^2 + delta_max^2)
    double t_hat_kz;  // freezing time evaluated at v_c
    double alpha_fit;
};

KzTimescales kz_timescales(double coupling, double delta_max, double alpha_fit);

// Exact final state of the symmetric crossing sweep: delta runs linearly
// from -delta_max to +delta_max over one half-period, i.e. t in
// [-T/4, T/4] with delta = (4 delta_max / T) t. `initial` is the state at
// t = -T/4. Closed form in parabolic cylinder functions.
QubitState symmetric_final_state(double coupling, double delta_max, double T,
                                 const QubitState& initial);

// Defect density of the symmetric sweep started in the upper eigenstate at
// -delta_max and projected on the lower eigenstate at +delta_max.
double lz_defect_analytic(double coupling, double delta_max, double T);

// The equal superposition the ramp-from-the-crossing quench starts in.
inline QubitState ramp_initial_state() {
    return {cxd{-1.0 / 1.4142135623730951, 0.0},
            cxd{1.0 / 1.4142135623730951, 0.0}};
}

// Exact final state of the ramp that starts on the crossing: delta runs
// from 0 to delta_max over [0, T] at fixed coupling p, starting from
// ramp_initial_state(). p = 0 is handled exactly (diagonal Hamiltonian).
QubitState halframp_final_state(double p, double delta_max, double T);

}  // namespace kzq
