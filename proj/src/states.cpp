#include "qcorr/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

ComplexMatrix sigma_x() { return ComplexMatrix(2, {0, 1, 1, 0}); }
ComplexMatrix sigma_y() { return ComplexMatrix(2, {0, cplx{0, -1}, cplx{0, 1}, 0}); }
ComplexMatrix sigma_z() { return ComplexMatrix(2, {1, 0, 0, -1}); }

ComplexMatrix sigma(int j) {
    switch (j) {
        case 0: return ComplexMatrix::identity(2);
        case 1: return sigma_x();
        case 2: return sigma_y();
        case 3: return sigma_z();
        default: throw std::invalid_argument("sigma index must be 0..3");
    }
}

DensityMatrix::DensityMatrix(int qubits, ComplexMatrix mat) : qubits_(qubits), mat_(std::move(mat)) {
    if (qubits_ < 1 || qubits_ > 4)
        throw std::invalid_argument("DensityMatrix: qubit count must be 1..4, got " + std::to_string(qubits_));
    if (mat_.dim() != (1 << qubits_))
        throw std::invalid_argument("DensityMatrix: dim " + std::to_string(mat_.dim()) +
                                    " does not match qubit count " + std::to_string(qubits_));
    const double herm = mat_.hermiticity_defect();
    if (herm > 1e-10)
        throw std::invalid_argument("DensityMatrix: hermiticity defect " + std::to_string(herm));
    const double tr = mat_.trace().real();
    if (std::abs(tr - 1.0) > 1e-9)
        throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) + " is not 1");
    const auto eig = hermitian_eig(mat_);
    if (eig.eigenvalues.front() < -1e-9)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(eig.eigenvalues.front()));
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.mat()); }

namespace {

int qubits_for_dim(int dim) {
    int q = 0;
    while ((1 << q) < dim) ++q;
    if ((1 << q) != dim) throw std::invalid_argument("ket dimension is not a power of two");
    return q;
}

ComplexMatrix projector(const std::vector<cplx>& ket) {
    const int d = static_cast<int>(ket.size());
    ComplexMatrix p(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) p(r, c) = ket[r] * std::conj(ket[c]);
    return p;
}

}  // namespace

DensityMatrix pure(const std::vector<cplx>& ket) {
    double norm2 = 0.0;
    for (const auto& v : ket) norm2 += std::norm(v);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
        throw std::invalid_argument("pure: ket norm " + std::to_string(std::sqrt(norm2)) + " is not 1");
    const int q = qubits_for_dim(static_cast<int>(ket.size()));
    return DensityMatrix(q, projector(ket));
}

DensityMatrix maximally_mixed(int qubits) {
    if (qubits < 1 || qubits > 4) throw std::invalid_argument("maximally_mixed: qubits must be 1..4");
    const int d = 1 << qubits;
    return DensityMatrix(qubits, ComplexMatrix::identity(d) * cplx{1.0 / d, 0.0});
}

DensityMatrix pseudopure(const std::vector<cplx>& ket, double eps) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("pseudopure: eps must be in [0, 1]");
    double norm2 = 0.0;
    for (const auto& v : ket) norm2 += std::norm(v);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
        throw std::invalid_argument("pseudopure: ket is not normalized");
    const int d = static_cast<int>(ket.size());
    const int q = qubits_for_dim(d);
    ComplexMatrix m = ComplexMatrix::identity(d) * cplx{(1.0 - eps) / d, 0.0};
    m += projector(ket) * cplx{eps, 0.0};
    return DensityMatrix(q, m);
}

DensityMatrix werner(double eps) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("werner: eps must be in [0, 1]");
    return pseudopure(ket_singlet(), eps);
}

DensityMatrix bell_diagonal(const BellDiagonalParams& params) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (int j = 1; j <= 3; ++j) m += kron(sigma(j), sigma(j)) * cplx{params.r[j - 1], 0.0};
    m *= 0.25;
    // Spectrum check happens in the DensityMatrix constructor; report the
    // parameters when it fails.
    try {
        return DensityMatrix(2, m);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("bell_diagonal: spectrum outside [0, 1] for r = (" +
                                    std::to_string(params.r[0]) + ", " + std::to_string(params.r[1]) +
                                    ", " + std::to_string(params.r[2]) + "): " + e.what());
    }
}

BlochForm bloch_decompose(const DensityMatrix& rho) {
    if (rho.qubits() != 2) throw std::invalid_argument("bloch_decompose: two-qubit states only");
    BlochForm b;
    const ComplexMatrix id = ComplexMatrix::identity(2);
    for (int i = 1; i <= 3; ++i) {
        b.x[i - 1] = (kron(sigma(i), id) * rho.mat()).trace().real();
        b.y[i - 1] = (kron(id, sigma(i)) * rho.mat()).trace().real();
        for (int j = 1; j <= 3; ++j)
            b.T[i - 1][j - 1] = (kron(sigma(i), sigma(j)) * rho.mat()).trace().real();
    }
    return b;
}

DensityMatrix bloch_reassemble(const BlochForm& b) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix m = kron(id, id);
    for (int i = 1; i <= 3; ++i) {
        m += kron(sigma(i), id) * cplx{b.x[i - 1], 0.0};
        m += kron(id, sigma(i)) * cplx{b.y[i - 1], 0.0};
        for (int j = 1; j <= 3; ++j) m += kron(sigma(i), sigma(j)) * cplx{b.T[i - 1][j - 1], 0.0};
    }
    m *= 0.25;
    return DensityMatrix(2, m);
}

DensityMatrix werner_family(double theta, double eps) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("werner_family: eps must be in [0, 1]");
    // Generator of a rotation in span{|00>, |psi->}:
    //   H = -i |psi-><00| + i |00><psi-|, exp(-i theta H)|00> = cos(theta)|00> - sin(theta)|psi->.
    const auto zz = ket_basis(2, 0);
    const auto s = ket_singlet();
    ComplexMatrix h(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            h(r, c) = cplx{0, -1} * s[r] * std::conj(zz[c]) + cplx{0, 1} * zz[r] * std::conj(s[c]);
    const auto eig = hermitian_eig(h);
    ComplexMatrix u(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx acc = 0.0;
            for (int k = 0; k < 4; ++k) {
                const cplx ph = std::polar(1.0, -theta * eig.eigenvalues[k]);
                acc += eig.eigenvectors(r, k) * ph * std::conj(eig.eigenvectors(c, k));
            }
            u(r, c) = acc;
        }
    const ComplexMatrix rho0 = pseudopure(zz, eps).mat();
    return DensityMatrix(2, u * rho0 * u.adjoint());
}

std::vector<cplx> ket_basis(int qubits, int index) {
    const int d = 1 << qubits;
    if (index < 0 || index >= d) throw std::invalid_argument("ket_basis: index out of range");
    std::vector<cplx> k(d, cplx{0, 0});
    k[index] = 1.0;
    return k;
}

std::vector<cplx> ket_singlet() {
    const double s = 1.0 / std::sqrt(2.0);
    return {0.0, s, -s, 0.0};
}

std::vector<cplx> ket_psi_plus() {
    const double s = 1.0 / std::sqrt(2.0);
    return {0.0, s, s, 0.0};
}

std::vector<cplx> ket_phi_plus() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, 0.0, 0.0, s};
}

std::vector<cplx> ket_phi_minus() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, 0.0, 0.0, -s};
}

}  // namespace qcorr
