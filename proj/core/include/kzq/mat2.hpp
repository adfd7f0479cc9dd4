#pragma once

#include <cmath>

#include "kzq/hamiltonian.hpp"

namespace kzq {

// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    cxd m00, m01, m10, m11;

    cxd trace() const { return m00 + m11; }
};

inline QubitState apply(const Mat2& m, const QubitState& v) {
    return {m.m00 * v.alpha + m.m01 * v.beta, m.m10 * v.alpha + m.m11 * v.beta};
}

// |x><y|
inline Mat2 outer(const QubitState& x, const QubitState& y) {
    return {x.alpha * std::conj(y.alpha), x.alpha * std::conj(y.beta),
            x.beta * std::conj(y.alpha), x.beta * std::conj(y.beta)};
}

// Eigenvalues of a Hermitian matrix, ascending. Only the Hermitian part of
// the input participates (a, d real parts; off-diagonal averaged).
inline void hermitian_eigenvalues(const Mat2& m, double& lo, double& hi) {
    const double a = m.m00.real();
    const double d = m.m11.real();
    const cxd b = 0.5 * (m.m01 + std::conj(m.m10));
    const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(b));
    lo = 0.5 * (a + d - disc);
    hi = 0.5 * (a + d + disc);
}

inline double frobenius_distance(const Mat2& x, const Mat2& y) {
    return std::sqrt(std::norm(x.m00 - y.m00) + std::norm(x.m01 - y.m01) +
                     std::norm(x.m10 - y.m10) + std::norm(x.m11 - y.m11));
}

}  // namespace kzq
