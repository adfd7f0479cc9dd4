#pragma once

#include <complex>

namespace kzq {

using cxd = std::complex<double>;

// Gamma function for complex argument (Lanczos, reflection for Re z < 1/2).
// Relative accuracy ~1e-13 away from the poles.
cxd cgamma(cxd z);

// 1/Gamma(z); exactly zero at the poles z = 0, -1, -2, ...
cxd rgamma(cxd z);

// Weber parabolic cylinder function D_nu(z) for complex order and argument.
//
// Every evaluation route carries a runtime estimate of its own rounding
// loss, and the best routing wins:
//   1. the confluent-hypergeometric split about z = 0, returned outright
//      when its cancellation estimate stays below `tol`;
//   2. the two reflection identities through D_nu(-z) and D_{-nu-1}(+-iz),
//      whose sub-evaluations anti-cancel where the split at z cancels;
//   3. for |Re(z^2)| <= 16, Taylor-series continuation of the Weber ODE
//      from the exact origin values, with a companion solution measuring
//      how much the dominant mode amplifies origin rounding.
// The smallest estimate is accepted up to `accept`; beyond that the demand
// is refused via accuracy_error carrying the estimate.
//
// The quench solutions evaluate on the e^{i pi/4} and e^{-3 i pi/4}
// diagonals, where route 1 or 3 stays well conditioned at every reachable
// order. On the opposite diagonal pair D_nu(z) turns exponentially
// subdominant in its own defining data once |Im nu| grows past ~10, and
// no double-precision representation anchored at the origin can deliver
// it; such points are refused rather than answered wrongly.
cxd pcf_d(cxd nu, cxd z, double tol = 1e-11, double accept = 2.5e-9);

// D_nu(0) and D'_nu(0) in closed form.
void pcf_origin(cxd nu, cxd& value, cxd& derivative);

}  // namespace kzq
