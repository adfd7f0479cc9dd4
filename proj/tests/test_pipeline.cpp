#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "kzq/analysis.hpp"
#include "kzq/config.hpp"
#include "kzq/ricemele.hpp"
#include "kzq/sweep.hpp"

using namespace kzq;

// End-to-end extraction pipelines pinned against an independent
// high-precision evaluation of the same closed forms.

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr double kJ = kTwoPi * 31.75e3;

std::vector<double> rm_ranges() {
    std::vector<double> dm;
    for (double khz : {5.25, 6.30, 7.35, 8.40, 9.45, 10.50})
        dm.push_back(kTwoPi * khz * 1e3);
    return dm;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("crossing-sweep knee extraction and critical law") {
    const std::vector<double> taus = geometric_grid(std::pow(2.0, -10), 16.0, 47);
    std::vector<double> xcs;
    for (double num : {25.0, 41.0, 57.0, 78.0, 110.0, 190.0, 440.0})
        xcs.push_back(num / 63.5);

    const double nsat_ref[7] = {1.335784542712e-01, 2.930923261239e-01,
                                4.439651388791e-01, 5.987871582547e-01,
                                7.456497073359e-01, 8.945410149575e-01,
                                9.733288360922e-01};
    const double tc_ref[7] = {1.393424987227e+00, 7.351692008108e-01,
                              5.965270164832e-01, 3.886311425520e-01,
                              3.123593279554e-01, 1.712487339363e-01,
                              7.654160930051e-02};
    const double slope_ref[7] = {-0.812999, -0.593865, -0.759808, -0.589499,
                                 -0.739221, -0.633447, -0.393608};
    const int pts_ref[7] = {7, 7, 7, 7, 7, 8, 12};

    std::vector<DataPoint> law;
    for (std::size_t i = 0; i < xcs.size(); ++i) {
        const double dm = 2.0 * kJ * xcs[i];
        std::vector<DataPoint> curve;
        for (double t : taus)
            curve.push_back({t, lz_defect(kJ, dm, t, Engine::analytic)});
        const CurveAnalysis ca = analyze_curve(curve, WindowRule::knee);
        CAPTURE(i);
        REQUIRE(ca.plateau.found);
        REQUIRE(ca.has_critical);
        CHECK(std::abs(ca.plateau.n_sat - nsat_ref[i]) / nsat_ref[i] <= 1e-9);
        CHECK(std::abs(ca.tau_c - tc_ref[i]) / tc_ref[i] <= 1e-7);
        CHECK(std::abs(ca.fit.exponent - slope_ref[i]) <= 1e-5);
        CHECK(ca.fit.n_points == pts_ref[i]);
        law.push_back({xcs[i], ca.tau_c});
    }

    const CriticalLawFit lf = fit_critical_law(law);
    CHECK(std::abs(lf.alpha - 1.647250003162) / 1.647250003162 <= 1e-8);
    CHECK(std::abs(lf.r2_linear - 0.9550793677) <= 1e-8);
    CHECK(std::abs(lf.r2_log - 0.5066364289) <= 1e-8);
}

TEST_CASE("ramp-model breakdown exponents") {
    const std::vector<double> dms = rm_ranges();
    const std::vector<double> Ts =
        geometric_grid(std::pow(2.0, -5) / dms.back(), 128.0 / dms.front(), 27);

    const double nsat_ref[6] = {7.832694625565e+03, 9.416929802736e+03,
                                1.095483394141e+04, 1.248093411562e+04,
                                1.409347512032e+04, 1.562293595002e+04};
    const double tc_ref[6] = {7.230803911148e-10, 4.975585519897e-10,
                              3.620341625768e-10, 2.802049915342e-10,
                              2.179981814327e-10, 1.772369721453e-10};
    const double a_ref[6] = {-0.5302584124, -0.5284467288, -0.5259682976,
                             -0.5259332205, -0.5245763244, -0.5241593692};
    const double aerr_ref[6] = {0.0076907079, 0.0079070991, 0.0079700184,
                                0.0070244558, 0.0071312043, 0.0062698346};

    std::vector<std::pair<double, std::vector<DataPoint>>> curves;
    for (std::size_t i = 0; i < dms.size(); ++i) {
        const double dm = dms[i];
        std::vector<DataPoint> curve;
        for (double T : Ts) {
            const MomentumGrid g = uniform_grid(cutoff_momentum(dm / T, dm));
            curve.push_back({T / dm,
                             total_defect_density(dm, T, g, Engine::analytic).n_total});
        }
        curves.push_back({dm, curve});
        const CurveAnalysis ca = analyze_curve(curve, WindowRule::tail);
        CAPTURE(i);
        REQUIRE(ca.plateau.found);
        REQUIRE(ca.has_critical);
        CHECK(std::abs(ca.plateau.n_sat - nsat_ref[i]) / nsat_ref[i] <= 1e-9);
        CHECK(std::abs(ca.tau_c - tc_ref[i]) / tc_ref[i] <= 1e-7);
        CHECK(std::abs(ca.fit.exponent - a_ref[i]) <= 1e-9);
        CHECK(std::abs(ca.fit.exponent_stderr - aerr_ref[i]) <= 1e-9);
    }

    const BreakdownSummary bs = breakdown_summary(curves, WindowRule::tail);
    CHECK(std::abs(bs.b - 2.0277243822) <= 1e-9);
    CHECK(std::abs(bs.b_stderr - 0.0102335606) <= 1e-9);
    CHECK(std::abs(bs.c - 0.9951060707) <= 1e-9);
    CHECK(std::abs(bs.c_stderr - 0.0032620863) <= 1e-9);
}

TEST_CASE("slow-quench curves overlay in the collapse coordinate") {
    const double dm = rm_ranges()[0];
    std::vector<std::vector<double>> curves;
    for (double dmT : {32.0, 64.0, 128.0}) {
        const double T = dmT / dm;
        std::vector<double> c;
        for (int i = 0; i <= 32; ++i) {
            const double x = i * (kTwoPi / 32.0);
            const double p = x * std::sqrt(dm / T);
            c.push_back(momentum_resolved_defect(p, dm, T, Engine::analytic));
        }
        curves.push_back(c);
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (std::size_t k = 0; k < curves[i].size(); ++k)
                dev = std::max(dev, std::abs(curves[i][k] - curves[j][k]));
    CHECK(std::abs(dev - 2.3842405918e-03) / 2.3842405918e-03 <= 1e-6);

    // far past the occupied window the curves are empty
    const double T = 128.0 / dm;
    double tail = 0.0;
    for (double x : {5.0, 5.5, 6.0})
        tail = std::max(tail, momentum_resolved_defect(x * std::sqrt(dm / T), dm,
                                                       T, Engine::analytic));
    CHECK(std::abs(tail - 3.3523716364e-05) / 3.3523716364e-05 <= 1e-6);
}

TEST_CASE("sweep drivers order rows and ignore scheduling") {
    LzSweepConfig lz;
    lz.coupling = kJ;
    lz.delta_max = {2.0 * kJ * 0.65, 2.0 * kJ * 1.22};
    lz.tau_grid = {0.25, 1.0, 4.0};
    lz.tomographic = true;
    lz.shots = 400;
    lz.seed = 17;

    lz.workers = 1;
    const std::vector<LzRow> serial = run_lz_sweep(lz);
    lz.workers = 8;
    const std::vector<LzRow> parallel = run_lz_sweep(lz);

    REQUIRE(serial.size() == 6);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].delta_max == parallel[i].delta_max);
        CHECK(serial[i].tau == parallel[i].tau);
        CHECK(serial[i].n_numeric == parallel[i].n_numeric);
        CHECK(serial[i].n_analytic == parallel[i].n_analytic);
        CHECK(serial[i].n_tomographic == parallel[i].n_tomographic);
    }
    // row order is (range index, tau index)
    CHECK(serial[0].delta_max == lz.delta_max[0]);
    CHECK(serial[3].delta_max == lz.delta_max[1]);
    CHECK(serial[0].tau == 0.25);
    CHECK(serial[1].tau == 1.0);
    for (const LzRow& r : serial) {
        CHECK(std::abs(r.n_numeric - r.n_analytic) <= 1e-7);
        CHECK(r.n_tomographic >= 0.0);
        CHECK(r.n_tomographic <= 1.0);
    }

    RmSweepConfig rm;
    rm.delta_max = {rm_ranges()[0], rm_ranges()[3]};
    rm.periods = {32.0 / rm_ranges()[0], 128.0 / rm_ranges()[0]};
    rm.workers = 1;
    const std::vector<SweepResult> rs = run_rm_sweep(rm);
    rm.workers = 8;
    const std::vector<SweepResult> rp = run_rm_sweep(rm);
    REQUIRE(rs.size() == 4);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        CHECK(rs[i].n_total == rp[i].n_total);
        CHECK(rs[i].delta_max == rp[i].delta_max);
    }
    CHECK(rs[0].tau_q == doctest::Approx(rm.periods[0] / rm.delta_max[0])
                             .epsilon(1e-15));
}

}  // TEST_SUITE
