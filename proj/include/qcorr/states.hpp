#pragma once

#include <array>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

// 2x2 Pauli matrices.
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();
// sigma(0) = identity, sigma(1..3) = x, y, z.
ComplexMatrix sigma(int j);

// Hermitian, unit-trace, positive-semidefinite state of 1-4 qubits.
// Invariants are checked on construction: hermiticity within 1e-10, trace
// within 1e-9 of 1, minimum eigenvalue >= -1e-9.
class DensityMatrix {
public:
    DensityMatrix(int qubits, ComplexMatrix mat);

    int qubits() const { return qubits_; }
    int dim() const { return mat_.dim(); }
    const ComplexMatrix& mat() const { return mat_; }

private:
    int qubits_;
    ComplexMatrix mat_;
};

double von_neumann_entropy(const DensityMatrix& rho);

// Two-qubit Bloch representation: local vectors x, y and correlation matrix T.
struct BlochForm {
    std::array<double, 3> x{};
    std::array<double, 3> y{};
    std::array<std::array<double, 3>, 3> T{};
};

// Correlation triple of a Bell-diagonal state; the derived spectrum
// (1 + s1 r1 + s2 r2 + s3 r3)/4 over sign triples with s1 s2 s3 = 1 must
// lie in [0, 1].
struct BellDiagonalParams {
    std::array<double, 3> r{};
};

DensityMatrix pure(const std::vector<cplx>& ket);
DensityMatrix maximally_mixed(int qubits);

// (1 - eps) * I/d + eps * |psi><psi| with d the ket dimension.
DensityMatrix pseudopure(const std::vector<cplx>& ket, double eps);

// (1 - eps)/4 * I + eps |psi-><psi-|
DensityMatrix werner(double eps);

// (1/4)(I + sum_j r_j sigma_j x sigma_j)
DensityMatrix bell_diagonal(const BellDiagonalParams& params);

// x_i = Tr[rho (sigma_i x I)], y_i = Tr[rho (I x sigma_i)],
// T_ij = Tr[rho (sigma_i x sigma_j)]. Two-qubit states only.
BlochForm bloch_decompose(const DensityMatrix& rho);
DensityMatrix bloch_reassemble(const BlochForm& b);

// U(theta) pseudopure(|00>, eps) U(theta)^dagger, where U(theta) rotates
// |00> continuously into the singlet: U(0) = I and U(pi/2)|00> = |psi->
// up to global phase, so theta = pi/2 yields werner(eps).
DensityMatrix werner_family(double theta, double eps);

// Common two-qubit kets.
std::vector<cplx> ket_basis(int qubits, int index);
std::vector<cplx> ket_singlet();    // (|01> - |10>)/sqrt2
std::vector<cplx> ket_psi_plus();   // (|01> + |10>)/sqrt2
std::vector<cplx> ket_phi_plus();   // (|00> + |11>)/sqrt2
std::vector<cplx> ket_phi_minus();  // (|00> - |11>)/sqrt2

}  // namespace qcorr
