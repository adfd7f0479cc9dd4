#include <cmath>
#include <vector>

#include "doctest.h"
#include "kzq/errors.hpp"
#include "kzq/hamiltonian.hpp"

using namespace kzq;

namespace {

QubitState apply_h(const TwoLevel& h, double delta, const QubitState& v) {
    return {-0.5 * delta * v.alpha + h.coupling * v.beta,
            h.coupling * v.alpha + 0.5 * delta * v.beta};
}

}  // namespace

TEST_SUITE("hamiltonian") {

TEST_CASE("gap and lambda") {
    const TwoLevel h{3.0};
    CHECK(h.lambda(8.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(h.gap(8.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(h.lambda(0.0) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("eigenbasis solves the eigenproblem") {
    const TwoLevel h{1.3e5};
    for (double delta : {-9e5, -1e3, 0.0, 2.7e4, 6e5}) {
        const EigenBasis e = eigenbasis(h, delta);
        CHECK(e.lambda == doctest::Approx(h.lambda(delta)).epsilon(1e-14));

        const QubitState hu = apply_h(h, delta, e.upper);
        const QubitState hl = apply_h(h, delta, e.lower);
        CHECK(std::abs(hu.alpha - e.lambda * e.upper.alpha) <= 1e-9);
        CHECK(std::abs(hu.beta - e.lambda * e.upper.beta) <= 1e-9);
        CHECK(std::abs(hl.alpha + e.lambda * e.lower.alpha) <= 1e-9);
        CHECK(std::abs(hl.beta + e.lambda * e.lower.beta) <= 1e-9);

        CHECK(std::abs(e.upper.norm2() - 1.0) <= 1e-14);
        CHECK(std::abs(e.lower.norm2() - 1.0) <= 1e-14);
        CHECK(std::abs(inner(e.upper, e.lower)) <= 1e-14);
        CHECK(e.upper.beta.real() > 0.0);
        CHECK(e.lower.beta.real() > 0.0);
    }
}

TEST_CASE("eigenbasis without coupling") {
    const EigenBasis neg = eigenbasis(TwoLevel{0.0}, -4.0);
    CHECK(neg.lambda == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(neg.upper.alpha - cxd{1.0, 0.0}) == 0.0);
    const EigenBasis pos = eigenbasis(TwoLevel{0.0}, 4.0);
    CHECK(std::abs(pos.upper.beta - cxd{1.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(eigenbasis(TwoLevel{0.0}, 0.0), domain_error);
}

TEST_CASE("ramp lookup and validation") {
    const DetuningRamp r({{0.0, 1.0, -2.0, 2.0}, {1.0, 3.0, 2.0, -4.0}});
    CHECK(r.start() == 0.0);
    CHECK(r.end() == 3.0);
    CHECK(r.duration() == 3.0);
    CHECK(r.delta(0.0) == -2.0);
    CHECK(r.delta(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.delta(1.0) == 2.0);
    CHECK(r.delta(2.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(r.delta(3.0) == -4.0);
    // clamped outside the schedule
    CHECK(r.delta(-1.0) == -2.0);
    CHECK(r.delta(9.0) == -4.0);

    CHECK_THROWS_AS(DetuningRamp(std::vector<RampSegment>{}), domain_error);
    CHECK_THROWS_AS(DetuningRamp({{0.0, 0.0, 1.0, 2.0}}), domain_error);
    CHECK_THROWS_AS(DetuningRamp({{0.0, 1.0, 0.0, 1.0}, {1.5, 2.0, 1.0, 0.0}}),
                    domain_error);
}

TEST_CASE("reversed ramp mirrors the schedule") {
    const DetuningRamp r({{0.5, 1.0, -2.0, 2.0}, {1.0, 3.0, 2.0, -4.0}});
    const DetuningRamp rev = r.reversed();
    CHECK(rev.start() == r.start());
    CHECK(rev.end() == r.end());
    for (double t : {0.5, 0.75, 1.3, 2.0, 2.9, 3.0})
        CHECK(rev.delta(t) ==
              doctest::Approx(r.delta(r.end() - (t - r.start()))).epsilon(1e-14));
}

TEST_CASE("canned schedules") {
    const double dm = 5.0, T = 2.0;
    const DetuningRamp sym = symmetric_ramp(dm, T);
    CHECK(sym.duration() == doctest::Approx(0.5 * T).epsilon(1e-15));
    CHECK(sym.delta(0.0) == -dm);
    CHECK(sym.delta(0.25 * T) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sym.delta(0.5 * T) == dm);

    const DetuningRamp half = half_ramp(dm, T);
    CHECK(half.duration() == T);
    CHECK(half.delta(0.0) == 0.0);
    CHECK(half.delta(T) == dm);

    const DetuningRamp tri = triangular_ramp(dm, T, 3);
    CHECK(tri.segments().size() == 6);
    CHECK(tri.duration() == doctest::Approx(3.0 * T).epsilon(1e-15));
    CHECK(tri.delta(0.0) == -dm);
    CHECK(tri.delta(0.5 * T) == dm);
    CHECK(tri.delta(T) == -dm);
    CHECK(tri.delta(2.5 * T) == dm);

    CHECK_THROWS_AS(symmetric_ramp(-1.0, 1.0), domain_error);
    CHECK_THROWS_AS(half_ramp(1.0, 0.0), domain_error);
    CHECK_THROWS_AS(triangular_ramp(1.0, 1.0, 0), domain_error);
}

TEST_CASE("quench-time conventions invert") {
    const double J = 1.995e5, dm = 5.2e5;
    for (double tau : {0.015625, 1.0, 16.0}) {
        const double T = lz_period_for_tau(J, dm, tau);
        CHECK(lz_tau_ratio(J, dm, T) == doctest::Approx(tau).epsilon(1e-14));
    }
    CHECK(rm_tau_q(4.0, 10.0) == doctest::Approx(2.5).epsilon(1e-15));
}

}  // TEST_SUITE
