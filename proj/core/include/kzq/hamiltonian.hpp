#pragma once

#include <complex>
#include <vector>

namespace kzq {

using cxd = std::complex<double>;

// Two complex amplitudes on the bare basis states.
struct QubitState {
    cxd alpha{0.0, 0.0};
    cxd beta{0.0, 0.0};

    double norm2() const { return std::norm(alpha) + std::norm(beta); }
};

// <x|y>, conjugate-linear in the first argument.
inline cxd inner(const QubitState& x, const QubitState& y) {
    return std::conj(x.alpha) * y.alpha + std::conj(x.beta) * y.beta;
}

// Two-level crossing Hamiltonian
//   H(delta) = [ -delta/2   J      ]
//              [  J         delta/2 ]
// J is the gap coupling, delta the detuning; both in rad/s.
struct TwoLevel {
    double coupling;  // J

    double gap(double delta) const;     // 2*lambda
    double lambda(double delta) const;  // +sqrt(J^2 + delta^2/4)
};

// Instantaneous eigenbasis. upper has energy +lambda, lower -lambda.
// For J != 0 the second component of both vectors is real positive.
struct EigenBasis {
    QubitState upper;
    QubitState lower;
    double lambda;
};

// Throws domain_error when J = 0 and delta = 0 (degenerate spectrum).
EigenBasis eigenbasis(const TwoLevel& h, double delta);

// Piecewise-linear detuning schedule. Segment i covers [t0, t1] and
// interpolates d0 -> d1; segments must be contiguous in time.
struct RampSegment {
    double t0, t1;
    double d0, d1;

    double slope() const { return (d1 - d0) / (t1 - t0); }
    double at(double t) const { return d0 + slope() * (t - t0); }
};

class DetuningRamp {
  public:
    DetuningRamp() = default;
    explicit DetuningRamp(std::vector<RampSegment> segments);

    double start() const { return segments_.front().t0; }
    double end() const { return segments_.back().t1; }
    double duration() const { return end() - start(); }
    double delta(double t) const;

    // Same schedule traversed backwards, re-anchored at t = start().
    DetuningRamp reversed() const;

    const std::vector<RampSegment>& segments() const { return segments_; }

  private:
    std::vector<RampSegment> segments_;
};

// delta: -delta_max -> +delta_max over [0, T/2] (one half-period of the
// triangular drive, the single pass through the crossing).
DetuningRamp symmetric_ramp(double delta_max, double period);

// delta: 0 -> delta_max over [0, T]; the quench that starts on the crossing.
DetuningRamp half_ramp(double delta_max, double period);

// Full triangular drive over `periods` periods of length T.
DetuningRamp triangular_ramp(double delta_max, double period, int periods);

// Dimensionless quench-time conventions.
//
// Crossing-centered sweep: velocity v = 4*delta_max/T, tau_Q = 2J/v,
// tau_0 = 1/2J, so tau_Q/tau_0 = J^2 T / delta_max.
double lz_tau_ratio(double coupling, double delta_max, double period);
double lz_period_for_tau(double coupling, double delta_max, double tau_ratio);

// Ramp from the crossing: velocity v = delta_max/T, tau_Q = T/delta_max.
double rm_tau_q(double delta_max, double period);

}  // namespace kzq
