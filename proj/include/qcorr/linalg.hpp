#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major, dimension capped at 16.
// Workhorse for every bit of algebra in this toolkit; small enough that
// naive O(n^3) products and a Jacobi eigensolver are the right tools.
class ComplexMatrix {
public:
    static constexpr int kMaxDim = 16;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::initializer_list<cplx> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    int dim() const { return dim_; }

    cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, cplx s) { return lhs *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix rhs) { return rhs *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    ComplexMatrix adjoint() const;
    cplx trace() const;

    // max_ij |a_ij - b_ij|
    double max_abs_diff(const ComplexMatrix& other) const;
    double max_abs() const;
    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }

private:
    int dim_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product with `a` varying slowest. Result dimension above 16 is rejected.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns, unitary
};

// Cyclic Jacobi for Hermitian input: off-diagonal threshold 1e-14, at most
// 100 sweeps. Deterministic for fixed input. Throws on non-Hermitian input.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

// Reduced matrix over the kept subsystem of a (dim_a x dim_b)-structured space.
// keep == 0 keeps the slow (first) factor, keep == 1 the fast (second) one.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, int keep);

// -sum p log2 p with 0 log 0 = 0. Entries below -1e-12 are an error; the
// vector is clamped to [0,1] and renormalized (sum must be within 1e-9 of 1).
double shannon_entropy(const std::vector<double>& p);

// Entropy of the clamped eigenvalue spectrum, in bits. Eigenvalues in
// [-1e-9, 0) are treated as numerical noise; anything more negative throws.
double von_neumann_entropy(const ComplexMatrix& rho);

// Binary entropy H(p, 1-p) in bits.
double binary_entropy(double p);

}  // namespace qcorr
