#include "qcorr/random.hpp"

#include <cmath>
#include <stdexcept>

namespace qcorr {

namespace {

cplx gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

}  // namespace

DensityMatrix random_state(int qubits, Rng& rng) {
    const int d = 1 << qubits;
    ComplexMatrix g(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = gaussian(rng);
    ComplexMatrix rho = g * g.adjoint();
    rho *= cplx{1.0, 0.0} / rho.trace();
    return DensityMatrix(qubits, rho);
}

DensityMatrix random_pure_state(int qubits, Rng& rng) {
    const int d = 1 << qubits;
    std::vector<cplx> k(d);
    double norm2 = 0.0;
    for (auto& v : k) {
        v = gaussian(rng);
        norm2 += std::norm(v);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : k) v *= inv;
    return pure(k);
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = gaussian(rng);
    ComplexMatrix h = g;
    h += g.adjoint();
    h *= 0.5;
    return h;
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = gaussian(rng);
    // Gram-Schmidt over columns.
    for (int c = 0; c < dim; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            cplx overlap = 0.0;
            for (int r = 0; r < dim; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
            for (int r = 0; r < dim; ++r) g(r, c) -= overlap * g(r, prev);
        }
        double norm2 = 0.0;
        for (int r = 0; r < dim; ++r) norm2 += std::norm(g(r, c));
        if (norm2 < 1e-24) throw std::runtime_error("random_unitary: degenerate Ginibre draw");
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < dim; ++r) g(r, c) *= inv;
    }
    return g;
}

BellDiagonalParams random_bell_diagonal(Rng& rng) {
    // Flat Dirichlet over the four Bell weights via normalized exponentials.
    std::exponential_distribution<double> expo(1.0);
    double w[4];
    double sum = 0.0;
    for (double& v : w) {
        v = expo(rng);
        sum += v;
    }
    for (double& v : w) v /= sum;
    // Weights ordered as (psi-, phi-, phi+, psi+); their diagonal correlation
    // signatures are (-1,-1,-1), (-1,1,1), (1,-1,1), (1,1,-1).
    BellDiagonalParams p;
    p.r[0] = -w[0] - w[1] + w[2] + w[3];
    p.r[1] = -w[0] + w[1] - w[2] + w[3];
    p.r[2] = -w[0] + w[1] + w[2] - w[3];
    return p;
}

DensityMatrix random_classical_state(Rng& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double theta = std::acos(1.0 - 2.0 * uni(rng));
    const double phi = 2.0 * M_PI * uni(rng);
    const double p = uni(rng);

    const cplx a{std::cos(theta / 2.0), 0.0};
    const cplx b = std::polar(std::sin(theta / 2.0), phi);
    const std::vector<cplx> up{a, b};
    const std::vector<cplx> dn{-std::conj(b), std::conj(a)};

    ComplexMatrix proj_up(2), proj_dn(2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            proj_up(r, c) = up[r] * std::conj(up[c]);
            proj_dn(r, c) = dn[r] * std::conj(dn[c]);
        }
    const ComplexMatrix rho_b0 = random_state(1, rng).mat();
    const ComplexMatrix rho_b1 = random_state(1, rng).mat();
    ComplexMatrix m = kron(proj_up, rho_b0) * cplx{p, 0.0};
    m += kron(proj_dn, rho_b1) * cplx{1.0 - p, 0.0};
    return DensityMatrix(2, m);
}

DensityMatrix random_product_state(Rng& rng) {
    const ComplexMatrix a = random_pure_state(1, rng).mat();
    const ComplexMatrix b = random_pure_state(1, rng).mat();
    return DensityMatrix(2, kron(a, b));
}

}  // namespace qcorr
