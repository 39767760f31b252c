#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

enum class PauliLetter { I, X, Y, Z };

// Signed tensor product of {I, X, Y, Z}: Hermitian, unitary, dichotomic.
// The leftmost letter acts on qubit 1 (the first, slowest tensor factor).
struct PauliObservable {
    int sign = +1;  // +1 or -1
    std::vector<PauliLetter> letters;

    ComplexMatrix materialize() const;
    std::string str() const;  // e.g. "+XZ", "-IY"
};

// Parses "+XZ" / "-IY" / "XX" (sign optional, defaults to +).
PauliObservable parse_pauli(const std::string& text);

// Tr[rho O]; throws on dimension mismatch or non-Hermitian observable, and
// if the imaginary part of the trace exceeds 1e-10.
double expectation(const DensityMatrix& rho, const ComplexMatrix& obs);
double expectation(const DensityMatrix& rho, const PauliObservable& obs);

// The nine two-qubit observables whose row products are all +1 and whose
// column products are (+1, +1, -1). Rows and columns mutually commute.
struct MerminSquare {
    std::array<std::array<PauliObservable, 3>, 3> grid;

    std::array<PauliObservable, 3> row(int i) const { return grid[i]; }
    std::array<PauliObservable, 3> column(int j) const {
        return {grid[0][j], grid[1][j], grid[2][j]};
    }
};

MerminSquare mermin_square();

// Two mutually commuting pseudo-spin triples on two qubits; each triple
// obeys the cyclic algebra G_a G_b = i e_abc G_c.
struct PseudoSpinSet {
    std::array<ComplexMatrix, 3> gamma;        // Gx, Gy, Gz
    std::array<ComplexMatrix, 3> gamma_prime;  // Gx', Gy', Gz'
};

PseudoSpinSet pseudo_spin_set();

struct ChshObservables {
    ComplexMatrix a, b, c, d;
};

// A = Gx, B = Gx' cos(beta) + Gz' sin(beta), C = Gz,
// D = Gx' cos(eta) + Gz' sin(eta). Each squares to the identity.
ChshObservables chsh_observables(double beta, double eta);

// Tr[rho (AB + BC + CD - AD)] for a two-qubit state.
double chsh_value(const DensityMatrix& rho, double beta, double eta);

}  // namespace qcorr
