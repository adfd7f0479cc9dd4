#include "kzq/propagator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "kzq/errors.hpp"

namespace kzq {

namespace {

using State = std::array<cxd, 2>;

// i alpha' = -delta/2 alpha + J beta
// i beta'  =  J alpha + delta/2 beta
State rhs(double J, double delta, const State& y) {
    const cxd i{0.0, 1.0};
    return {i * (0.5 * delta) * y[0] - i * J * y[1],
            -i * J * y[0] - i * (0.5 * delta) * y[1]};
}

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// 5th-order weights are row kA[6] (FSAL); error weights are b5 - b4.
constexpr double kE[7] = {71.0 / 57600,      0.0,          -71.0 / 16695,
                          71.0 / 1920,       -17253.0 / 339200,
                          22.0 / 525,        -1.0 / 40};

struct Stepper {
    double J;
    double rel_tol, abs_tol;
    double scale_floor;  // time scale for the underflow guard

    double err_accum = 0.0;
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;

    // Advances y from t0 to t1 inside one linear segment (delta smooth).
    // h_io carries the trial step size across calls.
    void run_segment(const RampSegment& seg, double t0, double t1, State& y,
                     double& h_io, double h_max) {
        double t = t0;
        State k0 = rhs(J, seg.at(t), y);
        while (t < t1) {
            double h = std::min(h_io, h_max);
            for (;;) {
                // Snap onto the segment end; t += h alone can land one ulp short.
                // A sub-ulp closing step is a landing, not stiffness.
                const bool last = h >= t1 - t;
                if (last) h = t1 - t;
                else if (h < 16.0 * std::numeric_limits<double>::epsilon() * scale_floor)
                    throw stiffness_error("evolve: step size underflow", t);
                State k[7];
                k[0] = k0;
                State yt;
                for (int s = 1; s < 7; ++s) {
                    yt = y;
                    for (int j = 0; j < s; ++j) {
                        yt[0] += h * kA[s][j] * k[j][0];
                        yt[1] += h * kA[s][j] * k[j][1];
                    }
                    k[s] = rhs(J, seg.at(t + kC[s] * h), yt);
                }
                // yt now holds the 5th-order solution (stage 7 is FSAL).
                cxd e0{0.0, 0.0}, e1{0.0, 0.0};
                for (int s = 0; s < 7; ++s) {
                    e0 += h * kE[s] * k[s][0];
                    e1 += h * kE[s] * k[s][1];
                }
                double err = 0.0;
                const double sc0 = abs_tol + rel_tol * std::max(std::abs(y[0]), std::abs(yt[0]));
                const double sc1 = abs_tol + rel_tol * std::max(std::abs(y[1]), std::abs(yt[1]));
                err += std::norm(e0) / (sc0 * sc0);
                err += std::norm(e1) / (sc1 * sc1);
                err = std::sqrt(0.5 * err);

                const double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
                if (err <= 1.0) {
                    t = last ? t1 : t + h;
                    y = yt;
                    k0 = k[6];
                    err_accum += std::sqrt(std::norm(e0) + std::norm(e1));
                    ++accepted;
                    const double next = h * std::clamp(grow, 0.2, 5.0);
                    // A clipped landing step must not shrink the carried trial step.
                    h_io = last ? std::max(h_io, next) : next;
                    break;
                }
                ++rejected;
                h *= std::clamp(grow, 0.1, 0.9);
            }
        }
    }
};

double auto_initial_step(const TwoLevel& h, const DetuningRamp& ramp, double cap) {
    // A few dozen steps per Rabi cycle at the starting gap, capped.
    const double omega = h.lambda(ramp.delta(ramp.start())) + 1.0 / ramp.duration();
    return std::min(cap, 0.05 / omega);
}

}  // namespace

EvolveResult evolve(const TwoLevel& h, const DetuningRamp& ramp,
                    const QubitState& initial, const IntegratorConfig& cfg) {
    if (cfg.rel_tol <= 0.0 || cfg.abs_tol <= 0.0)
        throw domain_error("evolve: tolerances must be positive");
    const double duration = ramp.duration();
    double h_max = duration / 100.0;
    if (cfg.max_step > 0.0) h_max = std::min(h_max, cfg.max_step);

    Stepper st;
    st.J = h.coupling;
    st.rel_tol = cfg.rel_tol;
    st.abs_tol = cfg.abs_tol;
    st.scale_floor = std::max(std::abs(ramp.start()), std::abs(ramp.end()));

    State y{initial.alpha, initial.beta};
    double step = cfg.initial_step > 0.0 ? std::min(cfg.initial_step, h_max)
                                         : auto_initial_step(h, ramp, h_max);
    for (const auto& seg : ramp.segments())
        st.run_segment(seg, seg.t0, seg.t1, y, step, h_max);

    EvolveResult out;
    out.state = {y[0], y[1]};
    out.norm_drift = std::abs(std::sqrt(out.state.norm2()) - 1.0);
    out.error_estimate = st.err_accum;
    out.accepted_steps = st.accepted;
    out.rejected_steps = st.rejected;
    return out;
}

double defect_density(const QubitState& final_state, const TwoLevel& h,
                      double delta_final) {
    const EigenBasis e = eigenbasis(h, delta_final);
    return std::norm(inner(e.lower, final_state));
}

std::vector<TracePoint> passage_trace(const TwoLevel& h, const DetuningRamp& ramp,
                                      const QubitState& initial,
                                      const std::vector<double>& sample_times,
                                      const IntegratorConfig& cfg) {
    if (cfg.rel_tol <= 0.0 || cfg.abs_tol <= 0.0)
        throw domain_error("passage_trace: tolerances must be positive");
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        const double t = sample_times[i];
        if (t < ramp.start() || t > ramp.end())
            throw domain_error("passage_trace: sample time outside the schedule");
        if (i > 0 && t < sample_times[i - 1])
            throw domain_error("passage_trace: sample times not sorted");
    }

    // Recorded times: samples plus both endpoints. Segment joins are still
    // landing points of the integration below, they are just not recorded.
    std::vector<double> stops = sample_times;
    stops.push_back(ramp.start());
    stops.push_back(ramp.end());
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

    const double duration = ramp.duration();
    double h_max = duration / 100.0;
    if (cfg.max_step > 0.0) h_max = std::min(h_max, cfg.max_step);

    Stepper st;
    st.J = h.coupling;
    st.rel_tol = cfg.rel_tol;
    st.abs_tol = cfg.abs_tol;
    st.scale_floor = std::max(std::abs(ramp.start()), std::abs(ramp.end()));

    State y{initial.alpha, initial.beta};
    double step = cfg.initial_step > 0.0 ? std::min(cfg.initial_step, h_max)
                                         : auto_initial_step(h, ramp, h_max);

    std::vector<TracePoint> trace;
    trace.reserve(stops.size());
    auto record = [&](double t) {
        QubitState s{y[0], y[1]};
        trace.push_back({t, s, std::norm(s.alpha)});
    };

    auto seg_it = ramp.segments().begin();
    record(stops.front());
    for (std::size_t i = 1; i < stops.size(); ++i) {
        double t = stops[i - 1];
        const double t_stop = stops[i];
        while (t < t_stop) {
            while (seg_it->t1 <= t && seg_it + 1 != ramp.segments().end()) ++seg_it;
            const double t_end = std::min(seg_it->t1, t_stop);
            st.run_segment(*seg_it, t, t_end, y, step, h_max);
            t = t_end;
        }
        record(t_stop);
    }
    return trace;
}

}  // namespace kzq
