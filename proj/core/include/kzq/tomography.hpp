#pragma once

#include <cstdint>

#include "kzq/hamiltonian.hpp"
#include "kzq/mat2.hpp"

namespace kzq {

enum class Basis { Z, X, Y };

// shots_per_basis = 0 is the infinite-shot sentinel: exact Born
// probabilities, no randomness consumed.
struct ShotConfig {
    std::uint64_t shots_per_basis = 10000;
    std::uint64_t rng_seed = 0;
};

struct BasisProbabilities {
    double p_plus;   // Z: bare state 1;  X: (1,1)/sqrt2;  Y: (1,i)/sqrt2
    double p_minus;  // the orthogonal partner
};

// Empirical outcome probabilities in one measurement basis. Each of the two
// projector populations is estimated from its own independent binomial draw
// (experimentally each projector needs its own prepared ensemble), so the
// pair need not sum to 1 at finite shots. Streams are derived from
// (seed, basis, projector), so draws are reproducible and order-free.
BasisProbabilities simulate_measurement(const QubitState& state, Basis basis,
                                        const ShotConfig& cfg);

struct StokesVector {
    double s0 = 1.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

// S1 = Px+ - Px-, S2 = Py+ - Py-, S3 = Pz0 - Pz1; S0 fixed to 1.
StokesVector stokes_from_populations(double p_z0, double p_z1, double p_x_plus,
                                     double p_x_minus, double p_y_plus,
                                     double p_y_minus);

// All six populations of the three-basis measurement set.
StokesVector measure_stokes(const QubitState& state, const ShotConfig& cfg);

using DensityMatrix = Mat2;

// rho = (S0 I + S1 sx + S2 sy + S3 sz) / 2. Hermitian with trace S0 by
// construction; possibly indefinite for noisy S.
DensityMatrix density_from_stokes(const StokesVector& s);

// Nearest physical state in the eigenvalue-clip sense: negative eigenvalues
// clipped to zero, trace renormalized to 1. Idempotent. Throws domain_error if
// clipping leaves the zero matrix.
DensityMatrix project_physical(const DensityMatrix& rho);

// Tr(rho |target><target|), clamped into [0, 1].
double overlap_defect(const DensityMatrix& rho, const QubitState& target);

// The full readout chain: measure in three bases, reconstruct, project,
// take the overlap with `target`.
double tomographic_defect(const QubitState& state, const QubitState& target,
                          const ShotConfig& cfg);

}  // namespace kzq
