#include "kzq/tomography.hpp"

#include <algorithm>
#include <cmath>

#include "kzq/errors.hpp"
#include "kzq/rng.hpp"

namespace kzq {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

QubitState basis_plus(Basis b) {
    switch (b) {
        case Basis::Z: return {cxd{1.0, 0.0}, cxd{0.0, 0.0}};
        case Basis::X: return {cxd{kInvSqrt2, 0.0}, cxd{kInvSqrt2, 0.0}};
        case Basis::Y: return {cxd{kInvSqrt2, 0.0}, cxd{0.0, kInvSqrt2}};
    }
    return {};
}

QubitState basis_minus(Basis b) {
    switch (b) {
        case Basis::Z: return {cxd{0.0, 0.0}, cxd{1.0, 0.0}};
        case Basis::X: return {cxd{kInvSqrt2, 0.0}, cxd{-kInvSqrt2, 0.0}};
        case Basis::Y: return {cxd{kInvSqrt2, 0.0}, cxd{0.0, -kInvSqrt2}};
    }
    return {};
}

double estimate(double born, std::uint64_t shots, std::uint64_t seed,
                std::uint64_t stream) {
    if (shots == 0) return born;
    SplitMix64 rng(mix_stream(seed, stream));
    return static_cast<double>(binomial_draw(rng, shots, born)) /
           static_cast<double>(shots);
}

}  // namespace

BasisProbabilities simulate_measurement(const QubitState& state, Basis basis,
                                        const ShotConfig& cfg) {
    const double born_plus = std::norm(inner(basis_plus(basis), state));
    const double born_minus = std::norm(inner(basis_minus(basis), state));
    const auto b = static_cast<std::uint64_t>(basis);
    return {estimate(born_plus, cfg.shots_per_basis, cfg.rng_seed, 2 * b),
            estimate(born_minus, cfg.shots_per_basis, cfg.rng_seed, 2 * b + 1)};
}

StokesVector stokes_from_populations(double p_z0, double p_z1, double p_x_plus,
                                     double p_x_minus, double p_y_plus,
                                     double p_y_minus) {
    StokesVector s;
    s.s0 = 1.0;
    s.s1 = p_x_plus - p_x_minus;
    s.s2 = p_y_plus - p_y_minus;
    s.s3 = p_z0 - p_z1;
    return s;
}

StokesVector measure_stokes(const QubitState& state, const ShotConfig& cfg) {
    const auto z = simulate_measurement(state, Basis::Z, cfg);
    const auto x = simulate_measurement(state, Basis::X, cfg);
    const auto y = simulate_measurement(state, Basis::Y, cfg);
    return stokes_from_populations(z.p_plus, z.p_minus, x.p_plus, x.p_minus,
                                   y.p_plus, y.p_minus);
}

DensityMatrix density_from_stokes(const StokesVector& s) {
    return {cxd{0.5 * (s.s0 + s.s3), 0.0}, cxd{0.5 * s.s1, -0.5 * s.s2},
            cxd{0.5 * s.s1, 0.5 * s.s2}, cxd{0.5 * (s.s0 - s.s3), 0.0}};
}

DensityMatrix project_physical(const DensityMatrix& rho) {
    // Hermitian part only; anti-Hermitian residue is measurement noise.
    const double a = rho.m00.real();
    const double d = rho.m11.real();
    const cxd b = 0.5 * (rho.m01 + std::conj(rho.m10));

    double lo, hi;
    hermitian_eigenvalues({cxd{a, 0.0}, b, std::conj(b), cxd{d, 0.0}}, lo, hi);

    // Eigenvector of the larger eigenvalue; the smaller one is orthogonal.
    QubitState v_hi;
    if (std::abs(b) > 1e-15 * (std::abs(a) + std::abs(d) + 1.0)) {
        v_hi = {b, cxd{hi - a, 0.0}};
    } else {
        v_hi = a >= d ? QubitState{cxd{1.0, 0.0}, cxd{0.0, 0.0}}
                      : QubitState{cxd{0.0, 0.0}, cxd{1.0, 0.0}};
    }
    const double nrm = std::sqrt(v_hi.norm2());
    v_hi.alpha /= nrm;
    v_hi.beta /= nrm;
    const QubitState v_lo{-std::conj(v_hi.beta), std::conj(v_hi.alpha)};

    const double chi = std::max(hi, 0.0);
    const double clo = std::max(lo, 0.0);
    const double tr = chi + clo;
    if (tr <= 0.0)
        throw domain_error("project_physical: nothing left after clipping");

    const Mat2 ph = outer(v_hi, v_hi);
    const Mat2 pl = outer(v_lo, v_lo);
    const double wh = chi / tr;
    const double wl = clo / tr;
    return {wh * ph.m00 + wl * pl.m00, wh * ph.m01 + wl * pl.m01,
            wh * ph.m10 + wl * pl.m10, wh * ph.m11 + wl * pl.m11};
}

double overlap_defect(const DensityMatrix& rho, const QubitState& target) {
    const QubitState rt = apply(rho, target);
    const double val = inner(target, rt).real();
    return std::clamp(val, 0.0, 1.0);
}

double tomographic_defect(const QubitState& state, const QubitState& target,
                          const ShotConfig& cfg) {
    const DensityMatrix rho =
        project_physical(density_from_stokes(measure_stokes(state, cfg)));
    return overlap_defect(rho, target);
}

}  // namespace kzq
