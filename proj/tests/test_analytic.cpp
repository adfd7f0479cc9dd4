#include <cmath>
#include <complex>

#include "doctest.h"
#include "kzq/analytic.hpp"
#include "kzq/errors.hpp"
#include "kzq/hamiltonian.hpp"

using namespace kzq;

namespace {

constexpr double kJ = 2.0 * 3.14159265358979323846 * 31.75e3;

struct SymRow {
    double xc, tau;  // inputs; dm = 2 J xc, T = tau dm / J^2
    double ar, ai, br, bi, n;
};

// Cross-checked against a high-precision evaluation of the same closed form.
constexpr SymRow kSymRows[] = {
    {0.394, 1.5625e-02, 8.265986934743965e-01, -3.464547411709581e-03,
     5.627581194801825e-01, -5.088793253670787e-03, 1.343743087059327e-01},
    {1.228, 1.0, 5.137409222336323e-01, -2.637128574841573e-01,
     -3.416812706966087e-01, -7.414713095428764e-01, 3.582439934998838e-01},
    {1.732, 2.0, 2.088743981679564e-01, 2.480356539916909e-01,
     1.949533149661824e-01, 9.256581470081617e-01, 2.289108646800437e-02},
    {6.929, 16.0, 5.233454899809997e-02, -4.900596479831380e-02,
     7.272265217791174e-01, -6.826427297029275e-01, 1.629394895577049e-08},
    {0.900, 0.25, 8.966358930429008e-01, -9.051939946346561e-02,
     3.828057157082506e-01, -2.032488564519544e-01, 4.400157227699889e-01},
    {7.000, 16.0, -5.508756834833402e-02, -4.447440022491111e-02,
     -7.767617826781816e-01, -6.258023014567559e-01, 1.320248996352978e-08},
};

struct HalfRow {
    double dm, dmT, x;  // inputs; T = dmT / dm, p = x sqrt(dm / T)
    double ar, ai, br, bi, n;
};

constexpr HalfRow kHalfRows[] = {
    {32986.7228930686, 32.0, 1.0, 6.136225806602709e-01, 7.293396146246606e-01,
     -2.299968031532302e-01, -1.965515850413777e-01, 2.006375576155824e-02},
    {32986.7228930686, 0.03125, 0.5, -7.041622638552336e-01, -6.793478749548432e-02,
     7.044875278933221e-01, 5.690073684031449e-02, 7.614022692340696e-03},
    {65973.4457861372, 128.0, 2.0, 9.713861302494721e-01, 1.536082102846001e-01,
     -1.719967800914050e-01, -5.683846699482585e-02, 9.302999029799198e-04},
    {32986.7228930686, 4.0, 3.0, -8.020462539543838e-01, 1.397926573526044e-01,
     5.723074501476684e-01, -9.820387962553542e-02, 2.623620446975533e-05},
    {46181.4120502960, 16.0, 0.2, 3.606103796448725e-01, 7.408827931560875e-01,
     -4.470174978447600e-01, 3.481783989827039e-01, 3.315689248613309e-01},
};

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("symmetric-sweep closed form") {
    const TwoLevel h{kJ};
    for (const SymRow& r : kSymRows) {
        const double dm = 2.0 * kJ * r.xc;
        const double T = r.tau * dm / (kJ * kJ);
        const QubitState fin =
            symmetric_final_state(kJ, dm, T, eigenbasis(h, -dm).upper);
        CAPTURE(r.xc);
        CAPTURE(r.tau);
        CHECK(std::abs(fin.alpha - cxd{r.ar, r.ai}) <= 1e-9);
        CHECK(std::abs(fin.beta - cxd{r.br, r.bi}) <= 1e-9);
        CHECK(std::abs(fin.norm2() - 1.0) <= 1e-10);
        const double n = std::norm(inner(eigenbasis(h, dm).lower, fin));
        CHECK(std::abs(n - r.n) / r.n <= 1e-6);
    }
}

TEST_CASE("defect density shortcut matches the projected closed form") {
    for (const SymRow& r : kSymRows) {
        const double dm = 2.0 * kJ * r.xc;
        const double T = r.tau * dm / (kJ * kJ);
        CHECK(std::abs(lz_defect_analytic(kJ, dm, T) - r.n) / r.n <= 1e-6);
    }
}

TEST_CASE("half-ramp closed form") {
    for (const HalfRow& r : kHalfRows) {
        const double T = r.dmT / r.dm;
        const double p = r.x * std::sqrt(r.dm / T);
        const QubitState fin = halframp_final_state(p, r.dm, T);
        CAPTURE(r.dm);
        CAPTURE(r.x);
        CHECK(std::abs(fin.alpha - cxd{r.ar, r.ai}) <= 1e-9);
        CHECK(std::abs(fin.beta - cxd{r.br, r.bi}) <= 1e-9);
        CHECK(std::abs(fin.norm2() - 1.0) <= 1e-10);
        const double n = std::norm(inner(eigenbasis(TwoLevel{p}, r.dm).upper, fin));
        CHECK(std::abs(n - r.n) / r.n <= 1e-6);
    }
}

TEST_CASE("half-ramp without coupling is a diagonal rotation") {
    const QubitState fin = halframp_final_state(0.0, 3.3e4, 1e-3);
    CHECK(std::abs(std::abs(fin.alpha) - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(std::abs(fin.beta) - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(fin.norm2() - 1.0) <= 1e-12);
}

TEST_CASE("single-crossing survival formula") {
    for (double gap : {1.0, 2.5})
        for (double v : {0.4, 3.0, 50.0})
            CHECK(lz_probability(gap, v) ==
                  doctest::Approx(std::exp(-2.0 * 3.14159265358979323846 * gap *
                                           gap / (4.0 * v)))
                      .epsilon(1e-14));
}

TEST_CASE("plateau prediction and detuning scale") {
    CHECK(plateau_prediction(2.0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(plateau_prediction(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(relative_detuning(4.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("critical quench time and freezing time") {
    // x_c = 1, alpha = 1
    CHECK(critical_quench_time(1.0, 2.0, 1.0) ==
          doctest::Approx(7.071067811865475e-01).epsilon(1e-14));
    CHECK(freezing_time_kz(1.0, 1.0, 1.0) ==
          doctest::Approx(4.858682717566458e-01).epsilon(1e-14));
}

TEST_CASE("derived timescales are mutually consistent") {
    const double J = 1.995e5, dm = 5.2e5, alpha = 1.65;
    const KzTimescales ts = kz_timescales(J, dm, alpha);
    const double xc = relative_detuning(dm, J);
    CHECK(ts.tau0 == doctest::Approx(1.0 / (2.0 * J)).epsilon(1e-14));
    CHECK(ts.tau_c ==
          doctest::Approx(ts.tau0 / std::sqrt(1.0 + xc * xc)).epsilon(1e-14));
    CHECK(ts.t_hat_c == doctest::Approx(ts.tau_c / alpha).epsilon(1e-14));
    CHECK(ts.v_c == doctest::Approx(alpha * dm * std::sqrt(4.0 * J * J + dm * dm))
                        .epsilon(1e-14));
    CHECK(ts.t_hat_kz ==
          doctest::Approx(freezing_time_kz(ts.v_c, J, alpha)).epsilon(1e-14));
    CHECK(ts.alpha_fit == alpha);
}

TEST_CASE("ramp start state") {
    const QubitState s = ramp_initial_state();
    CHECK(std::abs(s.norm2() - 1.0) <= 1e-15);
    CHECK(s.alpha.real() < 0.0);
    CHECK(s.beta.real() > 0.0);
}

}  // TEST_SUITE
