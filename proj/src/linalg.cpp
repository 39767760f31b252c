#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcorr {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > ComplexMatrix::kMaxDim)
        throw std::invalid_argument("matrix dimension must be in [1, 16], got " + std::to_string(dim));
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    a_.assign(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cplx> entries) : ComplexMatrix(dim) {
    if (entries.size() != a_.size())
        throw std::invalid_argument("entry count does not match dim^2");
    std::copy(entries.begin(), entries.end(), a_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in matrix addition");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in matrix subtraction");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - other.a_[i]));
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in matmul");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{0.0, 0.0}) continue;
            for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    if (da * db > ComplexMatrix::kMaxDim)
        throw std::invalid_argument("kron result dimension " + std::to_string(da * db) + " exceeds 16");
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const cplx aij = a(i, j);
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_hermitian(1e-10))
        throw std::invalid_argument("hermitian_eig: input is not Hermitian (defect " +
                                    std::to_string(m.hermiticity_defect()) + ")");
    const int n = m.dim();
    ComplexMatrix a = m;
    // Symmetrize exactly so roundoff in the input cannot leak into the iteration.
    for (int r = 0; r < n; ++r) {
        a(r, r) = cplx{a(r, r).real(), 0.0};
        for (int c = r + 1; c < n; ++c) {
            const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kOffThreshold = 1e-14;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= kOffThreshold) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double absapq = std::abs(apq);
                if (absapq <= kOffThreshold) continue;

                // Phase factor that makes the (p,q) entry real, then a real
                // Jacobi rotation that annihilates it. Plane rotation
                // U_pp = c, U_pq = s*e^{i phi}, U_qp = -s*e^{-i phi}, U_qq = c
                // with t the small root of t^2 + 2*tau*t - 1 = 0.
                const cplx phase = apq / absapq;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * absapq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;

                // Columns: A <- A U
                for (int r = 0; r < n; ++r) {
                    const cplx arp = a(r, p);
                    const cplx arq = a(r, q);
                    a(r, p) = c * arp - std::conj(sp) * arq;
                    a(r, q) = sp * arp + c * arq;
                }
                // Rows: A <- U^dagger A
                for (int col = 0; col < n; ++col) {
                    const cplx apc = a(p, col);
                    const cplx aqc = a(q, col);
                    a(p, col) = c * apc - sp * aqc;
                    a(q, col) = std::conj(sp) * apc + c * aqc;
                }
                // Accumulate eigenvectors: V <- V U
                for (int r = 0; r < n; ++r) {
                    const cplx vrp = v(r, p);
                    const cplx vrq = v(r, q);
                    v(r, p) = c * vrp - std::conj(sp) * vrq;
                    v(r, q) = sp * vrp + c * vrq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx{a(p, p).real(), 0.0};
                a(q, q) = cplx{a(q, q).real(), 0.0};
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, int keep) {
    if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != m.dim())
        throw std::invalid_argument("partial_trace: subsystem dims " + std::to_string(dim_a) + "x" +
                                    std::to_string(dim_b) + " inconsistent with matrix dim " +
                                    std::to_string(m.dim()));
    if (keep != 0 && keep != 1) throw std::invalid_argument("partial_trace: keep must be 0 or 1");

    if (keep == 0) {
        ComplexMatrix out(dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j) {
                cplx s = 0.0;
                for (int b = 0; b < dim_b; ++b) s += m(i * dim_b + b, j * dim_b + b);
                out(i, j) = s;
            }
        return out;
    }
    ComplexMatrix out(dim_b);
    for (int i = 0; i < dim_b; ++i)
        for (int j = 0; j < dim_b; ++j) {
            cplx s = 0.0;
            for (int a = 0; a < dim_a; ++a) s += m(a * dim_b + i, a * dim_b + j);
            out(i, j) = s;
        }
    return out;
}

double shannon_entropy(const std::vector<double>& p) {
    double sum = 0.0;
    for (double v : p) {
        if (v < -1e-12)
            throw std::invalid_argument("shannon_entropy: negative probability " + std::to_string(v));
        sum += std::clamp(v, 0.0, 1.0);
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("shannon_entropy: probabilities sum to " + std::to_string(sum));
    double h = 0.0;
    for (double v : p) {
        const double q = std::clamp(v, 0.0, 1.0) / sum;
        if (q > 0.0) h -= q * std::log2(q);
    }
    return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    const auto eig = hermitian_eig(rho);
    double h = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < -1e-9)
            throw std::invalid_argument("von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                                        " below -1e-9");
        if (lambda > 0.0) h -= lambda * std::log2(lambda);
    }
    return h;
}

double binary_entropy(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

}  // namespace qcorr
