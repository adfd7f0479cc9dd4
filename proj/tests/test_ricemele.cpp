#include <cmath>
#include <string>

#include "doctest.h"
#include "kzq/errors.hpp"
#include "kzq/ricemele.hpp"

using namespace kzq;

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

const double kDmax[] = {kTwoPi * 5.25e3,  kTwoPi * 6.30e3, kTwoPi * 7.35e3,
                        kTwoPi * 8.40e3,  kTwoPi * 9.45e3, kTwoPi * 10.50e3};

struct ModeSpot {
    int di;         // index into kDmax
    double dmT, x;  // T = dmT / dm, p = x sqrt(dm / T)
    double n;
};

constexpr ModeSpot kModeSpots[] = {
    {0, 32.0, 0.7, 6.432444690771519e-02},
    {0, 128.0, 2.0, 9.302999029799198e-04},
    {3, 64.0, 1.3, 6.550061324422873e-03},
    {5, 16.0, 0.0, 5.000000000000000e-01},
    {0, 128.0, 6.2832, 1.806222887712314e-05},
};

struct TotalSpot {
    int di;
    double dmT;
    double n_total;
};

constexpr TotalSpot kTotalSpots[] = {
    {0, 32.0, 1.087251509964020e+03},
    {0, 0.03125, 7.915173213062764e+03},
    {5, 128.0, 1.090989184411320e+03},
    {2, 1.0, 8.951982180776322e+03},
};

}  // namespace

TEST_SUITE("ricemele") {

TEST_CASE("bloch hamiltonian structure") {
    const RmParams par{2.0, 2.0, 1.0, 0.7};
    // at the zone edge the hopping terms cancel and only the staggered
    // potential survives
    const Mat2 edge = bloch_hamiltonian(par, 3.14159265358979323846);
    CHECK(std::abs(edge.m00 - cxd{0.7, 0.0}) <= 1e-12);
    CHECK(std::abs(edge.m11 - cxd{-0.7, 0.0}) <= 1e-12);
    CHECK(std::abs(edge.m01) <= 1e-12);

    // hermitian everywhere
    for (double k : {0.3, 1.1, 2.6, 5.9}) {
        const Mat2 h = bloch_hamiltonian(par, k);
        CHECK(std::abs(h.m01 - std::conj(h.m10)) <= 1e-14);
        CHECK(std::abs(h.m00.imag()) <= 1e-14);
        CHECK(std::abs(h.m11.imag()) <= 1e-14);
    }
}

TEST_CASE("momentum map expands about the zone edge") {
    const RmParams par{2.0, 2.0, 0.5, 0.0};
    CHECK(map_to_experiment(par, 3.14159265358979323846 / par.lattice_a) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // p = w (k a - pi), linear in k
    const double k = 3.0;
    CHECK(map_to_experiment(par, k) ==
          doctest::Approx(par.w_hop * (k * par.lattice_a -
                                       3.14159265358979323846))
              .epsilon(1e-12));
    CHECK_THROWS_AS(map_to_experiment(RmParams{1.0, 2.0}, 1.0), domain_error);
}

TEST_CASE("cutoff momentum") {
    const double dm = 3.3e4;
    const double vc = dm * dm;
    // below the critical rate: 2 pi sqrt(v)
    CHECK(cutoff_momentum(0.25 * vc, dm) ==
          doctest::Approx(kTwoPi * 0.5 * dm).epsilon(1e-12));
    // saturates at 2 pi delta_max; continuous at the boundary
    CHECK(cutoff_momentum(4.0 * vc, dm) == doctest::Approx(kTwoPi * dm).epsilon(1e-12));
    CHECK(cutoff_momentum(vc * (1.0 - 1e-9), dm) ==
          doctest::Approx(cutoff_momentum(vc * (1.0 + 1e-9), dm)).epsilon(1e-6));
    CHECK_THROWS_AS(cutoff_momentum(-1.0, dm), domain_error);
    CHECK_THROWS_AS(cutoff_momentum(1.0, 0.0), domain_error);
}

TEST_CASE("uniform grid shape") {
    const MomentumGrid g = uniform_grid(10.0, 17);
    CHECK(g.n_points == 17);
    CHECK(g.p_values.size() == 17);
    CHECK(g.p_values.front() == 0.0);
    CHECK(g.p_values.back() == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(g.p_max == doctest::Approx(10.0).epsilon(1e-15));
    for (int i = 1; i < 17; ++i)
        CHECK(g.p_values[i] - g.p_values[i - 1] ==
              doctest::Approx(10.0 / 16.0).epsilon(1e-12));

    CHECK_THROWS_AS(uniform_grid(10.0, 16), domain_error);
    CHECK_THROWS_AS(uniform_grid(10.0, 18), domain_error);
    CHECK_THROWS_AS(uniform_grid(0.0, 17), domain_error);
}

TEST_CASE("collapse coordinate") {
    CHECK(collapse_coordinate(3.0, 8.0, 2.0) == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("mode excitation reference values") {
    for (const ModeSpot& s : kModeSpots) {
        const double dm = kDmax[s.di];
        const double T = s.dmT / dm;
        const double p = s.x * std::sqrt(dm / T);
        const double n = momentum_resolved_defect(p, dm, T, Engine::analytic);
        CAPTURE(s.di);
        CAPTURE(s.x);
        CHECK(std::abs(n - s.n) / std::max(s.n, 1e-30) <= 1e-9);
    }
}

TEST_CASE("mode excitation engines agree") {
    for (const ModeSpot& s : {kModeSpots[0], kModeSpots[2]}) {
        const double dm = kDmax[s.di];
        const double T = s.dmT / dm;
        const double p = s.x * std::sqrt(dm / T);
        const double ana = momentum_resolved_defect(p, dm, T, Engine::analytic);
        const double num = momentum_resolved_defect(p, dm, T, Engine::numeric);
        CHECK(std::abs(num - ana) <= 1e-7);
    }
}

TEST_CASE("the uncoupled mode stays half excited") {
    CHECK(momentum_resolved_defect(0.0, kDmax[0], 32.0 / kDmax[0],
                                   Engine::analytic) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(
        momentum_resolved_defect(-1.0, kDmax[0], 1e-3, Engine::analytic),
        domain_error);
}

TEST_CASE("total excitation density reference values") {
    for (const TotalSpot& s : kTotalSpots) {
        const double dm = kDmax[s.di];
        const double T = s.dmT / dm;
        const MomentumGrid g = uniform_grid(cutoff_momentum(dm / T, dm));
        const SweepResult r = total_defect_density(dm, T, g, Engine::analytic);
        CAPTURE(s.di);
        CAPTURE(s.dmT);
        CHECK(std::abs(r.n_total - s.n_total) / s.n_total <= 1e-10);
        CHECK(r.delta_max == dm);
        CHECK(r.T == T);
        CHECK(r.tau_q == doctest::Approx(T / dm).epsilon(1e-15));
        CHECK(r.per_p.size() == g.p_values.size());
        CHECK(r.source == Engine::analytic);
    }
}

TEST_CASE("quadrature convergence gate") {
    // a grid stretched far past the occupied region leaves the peak
    // under-resolved; Simpson against its half-resolution check must refuse
    const double dm = kDmax[0];
    const double T = 32.0 / dm;
    const double pm = cutoff_momentum(dm / T, dm);
    try {
        total_defect_density(dm, T, uniform_grid(2.0 * pm, 17), Engine::analytic);
        FAIL("expected accuracy_error");
    } catch (const accuracy_error& e) {
        CHECK(std::string(e.what()).find("quadrature") != std::string::npos);
    }
}

}  // TEST_SUITE
