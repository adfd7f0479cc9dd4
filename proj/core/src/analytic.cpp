#include "kzq/analytic.hpp"

#include <cmath>

#include "kzq/errors.hpp"

namespace kzq {

namespace {

const cxd kEipi4{0.7071067811865476, 0.7071067811865476};  // e^{i pi/4}

}  // namespace

double plateau_prediction(double x_c) {
    return x_c * x_c / (1.0 + x_c * x_c);
}

double lz_probability(double gap, double velocity) {
    if (velocity <= 0.0)
        throw domain_error("lz_probability: velocity must be positive");
    if (gap < 0.0) throw domain_error("lz_probability: gap must be >= 0");
    const double xi = gap * gap / (4.0 * velocity);
    return std::exp(-2.0 * M_PI * xi);
}

double critical_quench_time(double coupling, double delta_max, double alpha_fit) {
    if (coupling <= 0.0 || delta_max <= 0.0 || alpha_fit <= 0.0)
        throw domain_error("critical_quench_time: inputs must be positive");
    const double xc = relative_detuning(delta_max, coupling);
    return 1.0 / (alpha_fit * xc * std::sqrt(1.0 + xc * xc));
}

double freezing_time_kz(double velocity, double coupling, double alpha_fit) {
    if (velocity <= 0.0 || coupling <= 0.0 || alpha_fit <= 0.0)
        throw domain_error("freezing_time_kz: inputs must be positive");
    const double v2 = velocity * velocity;
    const double a2 = alpha_fit * alpha_fit;
    const double J2 = coupling * coupling;
    const double radicand =
        -2.0 * J2 / v2 + std::sqrt(4.0 * J2 * J2 * a2 * a2 + v2 * a2) / (v2 * a2);
    if (radicand < 0.0)
        throw domain_error("freezing_time_kz: negative radicand");
    return std::sqrt(radicand);
}

KzTimescales kz_timescales(double coupling, double delta_max, double alpha_fit) {
    const double xc = relative_detuning(delta_max, coupling);
    KzTimescales ts;
    ts.tau0 = 1.0 / (2.0 * coupling);
    ts.tau_c = ts.tau0 / std::sqrt(1.0 + xc * xc);
    ts.t_hat_c = ts.tau_c / alpha_fit;
    ts.v_c = alpha_fit * delta_max *
             std::sqrt(4.0 * coupling * coupling + delta_max * delta_max);
    ts.t_hat_kz = freezing_time_kz(ts.v_c, coupling, alpha_fit);
    ts.alpha_fit = alpha_fit;
    return ts;
}

QubitState symmetric_final_state(double coupling, double delta_max, double T,
                                 const QubitState& initial) {
    if (coupling <= 0.0 || delta_max <= 0.0 || T <= 0.0)
        throw domain_error("symmetric_final_state: parameters must be positive");
    const double v = 4.0 * delta_max / T;
    const cxd c = kEipi4 * std::sqrt(v);
    const double kappa = coupling * coupling / v;
    const cxd nu0{0.0, -kappa};
    const cxd nu1{-1.0, -kappa};
    const cxd u = c * (-0.25 * T);

    const cxd d1u = pcf_d(nu1, u);
    const cxd d1mu = pcf_d(nu1, -u);
    const cxd d0u = pcf_d(nu0, u);
    const cxd d0mu = pcf_d(nu0, -u);

    // Wronskian-like pairing; analytically sqrt(2 pi)/Gamma(1 + i kappa).
    const cxd W = d1u * d0mu + d1mu * d0u;
    const cxd jf = cxd{0.0, 1.0} * coupling / c;
    const cxd a1 = (initial.alpha * d0mu + jf * initial.beta * d1mu) / W;
    const cxd a2 = (initial.alpha * d0u - jf * initial.beta * d1u) / W;

    QubitState out;
    out.alpha = a1 * d1mu + a2 * d1u;
    out.beta = (cxd{0.0, 1.0} * c / coupling) * (-a1 * d0mu + a2 * d0u);
    return out;
}

double lz_defect_analytic(double coupling, double delta_max, double T) {
    const TwoLevel h{coupling};
    const QubitState start = eigenbasis(h, -delta_max).upper;
    const QubitState fin = symmetric_final_state(coupling, delta_max, T, start);
    const EigenBasis end_basis = eigenbasis(h, delta_max);
    return std::norm(inner(end_basis.lower, fin));
}

QubitState halframp_final_state(double p, double delta_max, double T) {
    if (p < 0.0) throw domain_error("halframp_final_state: p must be >= 0");
    if (delta_max <= 0.0 || T <= 0.0)
        throw domain_error("halframp_final_state: parameters must be positive");
    const QubitState initial = ramp_initial_state();
    if (p == 0.0) {
        // Diagonal Hamiltonian: pure phase evolution of each amplitude.
        const double phase = 0.25 * delta_max * T;
        return {initial.alpha * std::exp(cxd{0.0, phase}),
                initial.beta * std::exp(cxd{0.0, -phase})};
    }
    const double r = delta_max / T;
    const cxd c = kEipi4 * std::sqrt(r);
    const double theta = p * p * T / delta_max;
    const cxd nu0{0.0, -theta};
    const cxd nu1{-1.0, -theta};
    const cxd w = c * T;

    cxd d1_0, d1p_0, d0_0, d0p_0;
    pcf_origin(nu1, d1_0, d1p_0);
    pcf_origin(nu0, d0_0, d0p_0);

    const cxd half{0.5, 0.0};
    const cxd mix = kEipi4 * std::sqrt(theta) * initial.beta / d0_0;
    const cxd a1 = half * (initial.alpha / d1_0 + mix);
    const cxd a2 = half * (initial.alpha / d1_0 - mix);

    QubitState out;
    out.alpha = a1 * pcf_d(nu1, w) + a2 * pcf_d(nu1, -w);
    out.beta = (cxd{0.0, 1.0} * c / p) * (-a1 * pcf_d(nu0, w) + a2 * pcf_d(nu0, -w));
    return out;
}

}  // namespace kzq
