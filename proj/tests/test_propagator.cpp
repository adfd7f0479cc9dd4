#include <cmath>
#include <complex>

#include "doctest.h"
#include "kzq/analytic.hpp"
#include "kzq/errors.hpp"
#include "kzq/propagator.hpp"

using namespace kzq;

namespace {

constexpr double kJ = 2.0 * 3.14159265358979323846 * 31.75e3;

QubitState conj_state(const QubitState& s) {
    return {std::conj(s.alpha), std::conj(s.beta)};
}

double state_distance(const QubitState& a, const QubitState& b) {
    return std::max(std::abs(a.alpha - b.alpha), std::abs(a.beta - b.beta));
}

}  // namespace

TEST_SUITE("propagator") {

TEST_CASE("constant detuning evolves phases only") {
    const TwoLevel h{1e5};
    const double delta = 7e4, t_end = 2e-4;
    const DetuningRamp hold({{0.0, t_end, delta, delta}});
    const EigenBasis e = eigenbasis(h, delta);

    const EvolveResult r = evolve(h, hold, e.upper);
    // stays in the eigenstate up to a phase
    CHECK(std::abs(std::abs(inner(e.upper, r.state)) - 1.0) <= 1e-9);
    CHECK(defect_density(r.state, h, delta) <= 1e-9);

    // and the phase is the exact e^{-i lambda t}
    const cxd phase = inner(e.upper, r.state);
    const cxd want = std::exp(cxd{0.0, -e.lambda * t_end});
    CHECK(std::abs(phase - want) <= 1e-7);
}

TEST_CASE("agreement with the sweep closed form") {
    const TwoLevel h{kJ};
    for (auto [xc, tau] : {std::pair{0.394, 0.015625}, {1.228, 1.0}, {7.0, 16.0}}) {
        const double dm = 2.0 * kJ * xc;
        const double T = tau * dm / (kJ * kJ);
        const QubitState init = eigenbasis(h, -dm).upper;
        const QubitState exact = symmetric_final_state(kJ, dm, T, init);
        const EvolveResult r = evolve(h, symmetric_ramp(dm, T), init);
        CAPTURE(xc);
        CAPTURE(tau);
        CHECK(state_distance(r.state, exact) <= 1e-6);
        CHECK(r.rejected_steps <= r.accepted_steps);
    }
}

TEST_CASE("norm drift stays within the integrator tolerance class") {
    const TwoLevel h{kJ};
    const double dm = 2.0 * kJ * 1.228;
    const double T = 1.0 * dm / (kJ * kJ);
    const QubitState init = eigenbasis(h, -dm).upper;

    const EvolveResult loose = evolve(h, symmetric_ramp(dm, T), init);
    CHECK(loose.norm_drift <= 1e-9);

    const EvolveResult tight =
        evolve(h, symmetric_ramp(dm, T), init, {1e-12, 1e-14});
    CHECK(tight.norm_drift <= 1e-11);
    CHECK(tight.accepted_steps > loose.accepted_steps);
}

TEST_CASE("tightening the tolerance is self-consistent") {
    const TwoLevel h{kJ};
    const double dm = 2.0 * kJ * 0.9;
    const double T = 0.25 * dm / (kJ * kJ);
    const QubitState init = eigenbasis(h, -dm).upper;
    const EvolveResult coarse =
        evolve(h, symmetric_ramp(dm, T), init, {1e-8, 1e-10});
    const EvolveResult fine =
        evolve(h, symmetric_ramp(dm, T), init, {1e-12, 1e-14});
    CHECK(state_distance(coarse.state, fine.state) <= 1e-6);
}

TEST_CASE("time reversal returns the initial state") {
    // conjugation maps the forward solution onto the reversed schedule
    const TwoLevel h{kJ};
    const double dm = 2.0 * kJ * 1.732;
    const double T = 2.0 * dm / (kJ * kJ);
    const DetuningRamp fwd = symmetric_ramp(dm, T);
    const QubitState init{cxd{0.6, -0.2}, cxd{0.3, 0.7054}};

    const EvolveResult there = evolve(h, fwd, init, {1e-11, 1e-13});
    const EvolveResult back =
        evolve(h, fwd.reversed(), conj_state(there.state), {1e-11, 1e-13});
    CHECK(state_distance(conj_state(back.state), init) <= 1e-8);
}

TEST_CASE("triangular drive crosses segment boundaries cleanly") {
    const TwoLevel h{kJ};
    const double dm = 6.0 * kJ;
    const double T = 4.0 / kJ;
    const EvolveResult r =
        evolve(h, triangular_ramp(dm, T, 3), eigenbasis(h, -dm).upper);
    CHECK(std::abs(r.state.norm2() - 1.0) <= 1e-9);
    CHECK(r.norm_drift <= 1e-9);
}

TEST_CASE("trace sampling") {
    const TwoLevel h{kJ};
    const double dm = 2.0 * kJ;
    const double T = 2.0 / kJ;
    const DetuningRamp ramp = triangular_ramp(dm, T, 2);
    const QubitState init{cxd{1.0, 0.0}, cxd{0.0, 0.0}};

    const std::vector<double> samples = {0.3 * T, 0.8 * T, 1.5 * T};
    const auto trace = passage_trace(h, ramp, init, samples);

    // endpoints inserted, interior points preserved in order
    REQUIRE(trace.size() == 5);
    CHECK(trace.front().t == 0.0);
    CHECK(trace.back().t == doctest::Approx(2.0 * T).epsilon(1e-12));
    CHECK(trace[1].t == doctest::Approx(0.3 * T).epsilon(1e-12));
    for (const TracePoint& p : trace) {
        CHECK(p.p_first >= 0.0);
        CHECK(p.p_first <= 1.0 + 1e-12);
        CHECK(std::abs(p.p_first - std::norm(p.state.alpha)) <= 1e-12);
    }

    // the traced endpoint is the evolved endpoint
    const EvolveResult direct = evolve(h, ramp, init);
    CHECK(state_distance(trace.back().state, direct.state) <= 1e-8);
}

TEST_CASE("trace rejects samples outside the schedule") {
    const TwoLevel h{kJ};
    const DetuningRamp ramp = half_ramp(2.0 * kJ, 1.0 / kJ);
    const QubitState init{cxd{1.0, 0.0}, cxd{0.0, 0.0}};
    CHECK_THROWS_AS(passage_trace(h, ramp, init, {-0.1 / kJ}), domain_error);
    CHECK_THROWS_AS(passage_trace(h, ramp, init, {2.0 / kJ}), domain_error);
}

TEST_CASE("defect density is a projection on the lower eigenstate") {
    const TwoLevel h{kJ};
    const double delta = 3.0 * kJ;
    const EigenBasis e = eigenbasis(h, delta);
    CHECK(defect_density(e.lower, h, delta) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(defect_density(e.upper, h, delta) <= 1e-12);
}

}  // TEST_SUITE
