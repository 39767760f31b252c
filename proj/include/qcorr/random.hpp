#pragma once

#include <random>

#include "qcorr/states.hpp"

namespace qcorr {

using Rng = std::mt19937_64;

// Ginibre construction G G^dagger / Tr: a full-rank random density matrix.
DensityMatrix random_state(int qubits, Rng& rng);

// Random pure state (Haar via normalized Gaussian ket).
DensityMatrix random_pure_state(int qubits, Rng& rng);

// Random Hermitian matrix with Gaussian entries, for eigensolver tests.
ComplexMatrix random_hermitian(int dim, Rng& rng);

// Haar-ish unitary via Gram-Schmidt on a Ginibre matrix.
ComplexMatrix random_unitary(int dim, Rng& rng);

// Uniform Bell-diagonal correlation triple (Bell weights from a flat Dirichlet).
BellDiagonalParams random_bell_diagonal(Rng& rng);

// Zero-discord state sum_i p_i |n_i><n_i| x rho_i with a random measurement
// direction on A and random single-qubit states on B.
DensityMatrix random_classical_state(Rng& rng);

// Random two-qubit product state (pure x pure).
DensityMatrix random_product_state(Rng& rng);

}  // namespace qcorr
