#pragma once

#include <cstdint>
#include <vector>

#include "kzq/hamiltonian.hpp"

namespace kzq {

// Tolerances and step limits for the adaptive integrator. A non-positive
// max_step or initial_step means "choose automatically"; the effective step
// cap never exceeds schedule duration / 100.
struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0;
    double initial_step = 0.0;
};

struct EvolveResult {
    QubitState state;
    // | ||state|| - 1 | at the end; the state is never renormalized, so this
    // measures accumulated integrator error.
    double norm_drift = 0.0;
    // Sum of per-step embedded error estimates, in amplitude units.
    double error_estimate = 0.0;
    std::uint64_t accepted_steps = 0;
    std::uint64_t rejected_steps = 0;
};

// Integrates i d/dt (alpha, beta) = H(delta(t)) (alpha, beta) over the full
// schedule with an embedded Dormand-Prince 5(4) pair. Steps land exactly on
// segment boundaries, so the piecewise-linear detuning is smooth inside
// every step. Throws stiffness_error if step-size control underflows.
EvolveResult evolve(const TwoLevel& h, const DetuningRamp& ramp,
                    const QubitState& initial, const IntegratorConfig& cfg = {});

// Squared overlap of `final` with the lower instantaneous eigenstate at the
// final detuning; the defect density of a single crossing.
double defect_density(const QubitState& final_state, const TwoLevel& h,
                      double delta_final);

struct TracePoint {
    double t;
    QubitState state;
    double p_first;  // population of bare basis state 1
};

// Population trace at the requested times (plus both schedule endpoints,
// inserted if absent). sample_times must be sorted and lie within the
// schedule; otherwise domain_error.
std::vector<TracePoint> passage_trace(const TwoLevel& h, const DetuningRamp& ramp,
                                      const QubitState& initial,
                                      const std::vector<double>& sample_times,
                                      const IntegratorConfig& cfg = {});

}  // namespace kzq
