#include "kzq/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "kzq/errors.hpp"

namespace kzq {

PowerLawFit fit_power_law(const std::vector<DataPoint>& points) {
    const std::size_t n = points.size();
    if (n < 3)
        throw insufficient_data_error("fit_power_law: need at least 3 points");
    double mx = 0.0, my = 0.0;
    for (const auto& p : points) {
        if (p.x <= 0.0 || p.y <= 0.0)
            throw domain_error("fit_power_law: coordinates must be positive");
        mx += std::log(p.x);
        my += std::log(p.y);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        const double dx = std::log(p.x) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(p.y) - my);
    }
    if (sxx == 0.0)
        throw domain_error("fit_power_law: all abscissae equal");
    const double slope = sxy / sxx;
    const double inter = my - slope * mx;

    double ss_res = 0.0;
    double lo = points.front().x, hi = points.front().x;
    for (const auto& p : points) {
        const double r = std::log(p.y) - (inter + slope * std::log(p.x));
        ss_res += r * r;
        lo = std::min(lo, p.x);
        hi = std::max(hi, p.x);
    }
    const double s2 = ss_res / static_cast<double>(std::max<std::size_t>(n - 2, 1));

    PowerLawFit f;
    f.exponent = slope;
    f.amplitude = std::exp(inter);
    f.exponent_stderr = std::sqrt(s2 / sxx);
    f.window_min = lo;
    f.window_max = hi;
    f.n_points = static_cast<int>(n);
    return f;
}

Plateau detect_plateau(std::vector<DataPoint> curve, double eps) {
    std::sort(curve.begin(), curve.end(),
              [](const DataPoint& a, const DataPoint& b) { return a.x < b.x; });
    Plateau p;
    if (curve.size() < 2) return p;

    std::size_t count = 1;
    double mean = curve[0].y;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const double m = (mean * count + curve[i].y) / (count + 1);
        bool ok = true;
        for (std::size_t j = 0; j <= i && ok; ++j)
            ok = std::abs(curve[j].y - m) <= eps * m;
        if (!ok) break;
        mean = m;
        count = i + 1;
    }
    if (count < 2) return p;
    p.found = true;
    p.n_sat = mean;
    p.tau_exit = curve[count - 1].x;
    p.members = static_cast<int>(count);
    return p;
}

double critical_tau(const PowerLawFit& fit, double n_sat) {
    if (n_sat <= 0.0 || fit.amplitude <= 0.0)
        throw domain_error("critical_tau: values must be positive");
    if (fit.exponent >= 0.0)
        throw domain_error("critical_tau: law does not descend, no intersection");
    return std::pow(n_sat / fit.amplitude, 1.0 / fit.exponent);
}

namespace {

void fit_tail(const std::vector<DataPoint>& curve, CurveAnalysis& out) {
    const double floor = 0.02 * out.plateau.n_sat;
    double tc = out.plateau.tau_exit;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<DataPoint> sel;
        for (const auto& p : curve)
            if (p.x >= 2.0 * tc && p.y >= floor) sel.push_back(p);
        if (sel.size() < 3) break;
        const PowerLawFit f = fit_power_law(sel);
        if (f.exponent >= 0.0) break;
        const double tc_new = critical_tau(f, out.plateau.n_sat);
        if (!std::isfinite(tc_new) || tc_new <= 0.0) break;
        out.fit = f;
        out.has_fit = true;
        out.tau_c = tc_new;
        out.has_critical = true;
        tc = tc_new;
    }
}

void fit_knee(const std::vector<DataPoint>& curve, CurveAnalysis& out) {
    const double n_sat = out.plateau.n_sat;
    std::size_t i0 = curve.size();
    for (std::size_t i = 0; i < curve.size(); ++i)
        if (curve[i].y < 0.95 * n_sat) {
            i0 = i;
            break;
        }
    if (i0 == curve.size()) return;
    std::size_t i1 = i0;
    while (i1 < curve.size() && curve[i1].y >= 0.3 * n_sat) ++i1;
    if (i1 - i0 < 3) return;

    const std::vector<DataPoint> sel(curve.begin() + i0, curve.begin() + i1);
    const PowerLawFit f = fit_power_law(sel);
    if (f.exponent >= 0.0) return;
    out.fit = f;
    out.has_fit = true;
    out.tau_c = critical_tau(f, n_sat);
    out.has_critical = true;
}

}  // namespace

CurveAnalysis analyze_curve(std::vector<DataPoint> curve, WindowRule rule,
                            double eps_plateau) {
    std::sort(curve.begin(), curve.end(),
              [](const DataPoint& a, const DataPoint& b) { return a.x < b.x; });
    CurveAnalysis out;
    out.plateau = detect_plateau(curve, eps_plateau);
    if (!out.plateau.found) return out;
    if (rule == WindowRule::tail)
        fit_tail(curve, out);
    else
        fit_knee(curve, out);
    return out;
}

BreakdownSummary breakdown_summary(
    const std::vector<std::pair<double, std::vector<DataPoint>>>& curves,
    WindowRule rule, double eps_plateau) {
    BreakdownSummary s;
    for (const auto& [delta_max, curve] : curves) {
        const CurveAnalysis a = analyze_curve(curve, rule, eps_plateau);
        if (!a.plateau.found || !a.has_critical) continue;
        s.rows.push_back({delta_max, a.plateau.n_sat, a.tau_c, a.fit});
    }
    if (s.rows.size() < 3)
        throw insufficient_data_error(
            "breakdown_summary: fewer than 3 usable quench-range curves");

    std::vector<DataPoint> tc_pts, nsat_pts;
    for (const auto& r : s.rows) {
        tc_pts.push_back({r.delta_max, r.tau_c});
        nsat_pts.push_back({r.delta_max, r.n_sat});
    }
    const PowerLawFit fb = fit_power_law(tc_pts);
    const PowerLawFit fc = fit_power_law(nsat_pts);
    s.b = -fb.exponent;
    s.b_stderr = fb.exponent_stderr;
    s.c = fc.exponent;
    s.c_stderr = fc.exponent_stderr;
    return s;
}

CriticalLawFit fit_critical_law(const std::vector<DataPoint>& xc_tauc) {
    if (xc_tauc.size() < 3)
        throw insufficient_data_error("fit_critical_law: need at least 3 points");
    double num = 0.0, den = 0.0;
    for (const auto& p : xc_tauc) {
        if (p.x <= 0.0 || p.y <= 0.0)
            throw domain_error("fit_critical_law: coordinates must be positive");
        const double shape = 1.0 / (p.x * std::sqrt(1.0 + p.x * p.x));
        num += p.y * shape;
        den += shape * shape;
    }
    const double k = num / den;

    double mean = 0.0, lmean = 0.0, rmean = 0.0;
    for (const auto& p : xc_tauc) {
        const double shape = 1.0 / (p.x * std::sqrt(1.0 + p.x * p.x));
        mean += p.y;
        lmean += std::log(p.y);
        rmean += std::log(p.y) - std::log(shape);
    }
    const double n = static_cast<double>(xc_tauc.size());
    mean /= n;
    lmean /= n;
    rmean /= n;

    double ss_res = 0.0, ss_tot = 0.0, lss_res = 0.0, lss_tot = 0.0;
    for (const auto& p : xc_tauc) {
        const double shape = 1.0 / (p.x * std::sqrt(1.0 + p.x * p.x));
        ss_res += (p.y - k * shape) * (p.y - k * shape);
        ss_tot += (p.y - mean) * (p.y - mean);
        const double lr = std::log(p.y) - std::log(shape) - rmean;
        lss_res += lr * lr;
        const double lt = std::log(p.y) - lmean;
        lss_tot += lt * lt;
    }

    CriticalLawFit f;
    f.alpha = 1.0 / k;
    f.r2_linear = 1.0 - ss_res / ss_tot;
    f.r2_log = 1.0 - lss_res / lss_tot;
    return f;
}

}  // namespace kzq
