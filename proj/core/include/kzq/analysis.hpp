#pragma once

#include <utility>
#include <vector>

namespace kzq {

struct DataPoint {
    double x;
    double y;
};

// Universality-class inputs and the exponents they predict.
struct ScalingExponents {
    double d = 1.0;   // spatial dimension
    double z = 1.0;   // dynamic exponent
    double nu = 1.0;  // correlation-length exponent

    double a_pred() const { return -d * nu / (z * nu + 1.0); }
    double b_pred() const { return z * nu + 1.0; }
    double c_pred() const { return d * nu; }
};

struct PowerLawFit {
    double exponent = 0.0;
    double amplitude = 0.0;
    double exponent_stderr = 0.0;
    double window_min = 0.0;  // abscissa range actually used
    double window_max = 0.0;
    int n_points = 0;
};

// Ordinary least squares on (log x, log y). The caller selects the window;
// every point handed in participates. Throws insufficient_data_error below
// 3 points and domain_error on non-positive coordinates.
PowerLawFit fit_power_law(const std::vector<DataPoint>& points);

struct Plateau {
    bool found = false;
    double n_sat = 0.0;
    double tau_exit = 0.0;  // abscissa of the last member
    int members = 0;
};

// Grows a member set from the smallest abscissa while every member stays
// within eps (relative) of the running mean. Input is sorted internally.
// Fewer than 2 qualifying points reports found = false, never throws.
Plateau detect_plateau(std::vector<DataPoint> curve, double eps = 0.05);

// Intersection of the fitted descending law with the plateau:
// (n_sat / amplitude)^(1 / exponent).
double critical_tau(const PowerLawFit& fit, double n_sat);

// How the slow-branch fit window is chosen.
//   tail: points with tau >= 2 * tau_c estimate, one refinement pass,
//         floor at 2% of n_sat (the ramp-model pipeline).
//   knee: the contiguous run where the curve falls from 95% to 30% of
//         n_sat (the crossing-sweep pipeline, whose slow branch is
//         exponential rather than power-law further out).
enum class WindowRule { tail, knee };

struct CurveAnalysis {
    Plateau plateau;
    bool has_fit = false;
    PowerLawFit fit;
    bool has_critical = false;
    double tau_c = 0.0;
};

// Full per-curve extraction: plateau, windowed slow-branch fit, critical
// abscissa. Missing pieces are reported as absent rather than thrown.
CurveAnalysis analyze_curve(std::vector<DataPoint> curve, WindowRule rule,
                            double eps_plateau = 0.05);

struct BreakdownRow {
    double delta_max = 0.0;
    double n_sat = 0.0;
    double tau_c = 0.0;
    PowerLawFit slow_fit;
};

struct BreakdownSummary {
    std::vector<BreakdownRow> rows;
    double b = 0.0;  // tau_c ~ delta_max^{-b}
    double b_stderr = 0.0;
    double c = 0.0;  // n_sat ~ delta_max^{c}
    double c_stderr = 0.0;
};

// Cross-delta_max scaling exponents. Curves that yield no plateau or no
// critical point are dropped; fewer than 3 usable curves throws
// insufficient_data_error.
BreakdownSummary breakdown_summary(
    const std::vector<std::pair<double, std::vector<DataPoint>>>& curves,
    WindowRule rule, double eps_plateau = 0.05);

struct CriticalLawFit {
    double alpha = 0.0;
    double r2_linear = 0.0;
    double r2_log = 0.0;
};

// One-parameter fit of tau_c(x_c) to (1/alpha) / (x_c sqrt(1 + x_c^2)).
// alpha minimizes the linear-space residual; both linear- and log-space
// R^2 are reported (the log-space value uses the log-optimal alpha).
CriticalLawFit fit_critical_law(const std::vector<DataPoint>& xc_tauc);

}  // namespace kzq
