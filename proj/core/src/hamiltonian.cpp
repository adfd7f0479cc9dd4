#include "kzq/hamiltonian.hpp"

#include <cmath>

#include "kzq/errors.hpp"

namespace kzq {

double TwoLevel::lambda(double delta) const {
    return std::sqrt(coupling * coupling + 0.25 * delta * delta);
}

double TwoLevel::gap(double delta) const { return 2.0 * lambda(delta); }

EigenBasis eigenbasis(const TwoLevel& h, double delta) {
    const double J = h.coupling;
    if (J == 0.0) {
        if (delta == 0.0)
            throw domain_error("eigenbasis: degenerate spectrum at J = 0, delta = 0");
        // Diagonal Hamiltonian: bare states are the eigenstates.
        EigenBasis e;
        e.lambda = 0.5 * std::abs(delta);
        if (delta < 0.0) {
            e.upper = {cxd{1.0, 0.0}, cxd{0.0, 0.0}};
            e.lower = {cxd{0.0, 0.0}, cxd{1.0, 0.0}};
        } else {
            e.upper = {cxd{0.0, 0.0}, cxd{1.0, 0.0}};
            e.lower = {cxd{1.0, 0.0}, cxd{0.0, 0.0}};
        }
        return e;
    }
    const double lam = h.lambda(delta);
    EigenBasis e;
    e.lambda = lam;
    const double cu = lam - 0.5 * delta;
    const double nu = std::sqrt(J * J + cu * cu);
    e.upper = {cxd{cu / nu, 0.0}, cxd{J / nu, 0.0}};
    const double cl = -lam - 0.5 * delta;
    const double nl = std::sqrt(J * J + cl * cl);
    e.lower = {cxd{cl / nl, 0.0}, cxd{J / nl, 0.0}};
    return e;
}

DetuningRamp::DetuningRamp(std::vector<RampSegment> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty())
        throw domain_error("DetuningRamp: no segments");
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto& s = segments_[i];
        if (!(s.t1 > s.t0))
            throw domain_error("DetuningRamp: segment with non-positive duration");
        if (i > 0 && segments_[i - 1].t1 != s.t0)
            throw domain_error("DetuningRamp: segments not contiguous");
    }
}

double DetuningRamp::delta(double t) const {
    if (t <= start()) return segments_.front().at(start());
    if (t >= end()) return segments_.back().at(end());
    for (const auto& s : segments_)
        if (t <= s.t1) return s.at(t);
    return segments_.back().at(end());
}

DetuningRamp DetuningRamp::reversed() const {
    const double t_begin = start();
    const double t_final = end();
    std::vector<RampSegment> segs;
    segs.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
        segs.push_back({t_begin + (t_final - it->t1), t_begin + (t_final - it->t0),
                        it->d1, it->d0});
    return DetuningRamp(std::move(segs));
}

DetuningRamp symmetric_ramp(double delta_max, double period) {
    if (delta_max <= 0.0 || period <= 0.0)
        throw domain_error("symmetric_ramp: delta_max and period must be positive");
    return DetuningRamp({{0.0, 0.5 * period, -delta_max, delta_max}});
}

DetuningRamp half_ramp(double delta_max, double period) {
    if (delta_max <= 0.0 || period <= 0.0)
        throw domain_error("half_ramp: delta_max and period must be positive");
    return DetuningRamp({{0.0, period, 0.0, delta_max}});
}

DetuningRamp triangular_ramp(double delta_max, double period, int periods) {
    if (delta_max <= 0.0 || period <= 0.0 || periods < 1)
        throw domain_error("triangular_ramp: bad parameters");
    std::vector<RampSegment> segs;
    segs.reserve(2 * static_cast<std::size_t>(periods));
    for (int n = 0; n < periods; ++n) {
        const double t0 = n * period;
        segs.push_back({t0, t0 + 0.5 * period, -delta_max, delta_max});
        segs.push_back({t0 + 0.5 * period, t0 + period, delta_max, -delta_max});
    }
    return DetuningRamp(std::move(segs));
}

double lz_tau_ratio(double coupling, double delta_max, double period) {
    return coupling * coupling * period / delta_max;
}

double lz_period_for_tau(double coupling, double delta_max, double tau_ratio) {
    return tau_ratio * delta_max / (coupling * coupling);
}

double rm_tau_q(double delta_max, double period) { return period / delta_max; }

}  // namespace kzq
