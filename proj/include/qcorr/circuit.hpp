#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcorr/measurement.hpp"
#include "qcorr/observables.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// One gate of the measurement-protocol circuits. Unitary kinds materialize to
// unitary matrices; Dephase is a trace-preserving channel with Kraus
// operators {sqrt(1-p) I, sqrt(p) Z}.
struct Gate {
    enum class Kind { Cnot, AntiCnot, AxisRotation, FreePrecession, Dephase, ControlledU };

    Kind kind;
    int q0 = 0;  // control for two-qubit kinds, target otherwise
    int q1 = 0;  // target for two-qubit kinds
    char axis = 'z';
    double angle = 0.0;     // AxisRotation: exp(-i angle/2 sigma_axis)
    double omega = 0.0;     // FreePrecession Hamiltonian (omega/2) sigma_z
    double duration = 0.0;  // FreePrecession
    double strength = 0.0;  // Dephase probability in [0, 1]
    ComplexMatrix u;        // ControlledU payload (2x2 unitary)

    static Gate cnot(int control, int target);
    static Gate anti_cnot(int control, int target);
    static Gate rotation(int qubit, char axis, double angle);
    static Gate free_precession(int qubit, double omega, double duration);
    static Gate dephase(int qubit, double strength);
    static Gate controlled_u(int control, int target, ComplexMatrix u);
};

// Kraus operators of the single-qubit dephasing channel of strength p.
std::vector<ComplexMatrix> dephase_kraus(double strength);

struct Circuit {
    int qubits = 0;
    std::vector<Gate> gates;
};

// Applies gates in order: unitaries as U rho U^dagger, channels via Kraus sums.
DensityMatrix apply(const Circuit& circuit, const DensityMatrix& rho);

// Full-register matrix of one unitary gate (throws for Dephase).
ComplexMatrix gate_matrix(const Gate& g, int qubits);

// Line-oriented text form, one gate per line, e.g.
//   CNOT 0 1
//   RZ 1 1.5707963
//   FREE 1 omega=6.2832 t=0.25
//   DEPHASE 1 0.1
//   CU 0 1  0 0  1 0  1 0  0 0
std::string to_text(const Circuit& circuit);
Circuit from_text(const std::string& text);

// --- Measurement protocols ---------------------------------------------

// Moussa protocol for the two-time correlation of sigma_x on a precessing
// qubit: ancilla in |+>, controlled-sigma_x, free precession over tj - ti,
// controlled-sigma_x, then the ancilla <sigma_x> equals C_ij.
double moussa_ttcc(double omega, double t_i, double t_j, const DensityMatrix& rho_s);

// Same circuit with a dephasing channel of strength (1 - exp(-dt/t2))/2 on
// the system during the delay; returns cos(omega dt) exp(-dt/t2).
double dephase_ttcc(double omega, double t_i, double t_j, double t2);

// Ancilla-assisted product measurement of a mutually commuting observable
// triple; equals Tr[rho O1 O2 O3].
double moussa_row_expectation(const DensityMatrix& rho,
                              const std::array<PauliObservable, 3>& triple);

// Joint outcome table for a dichotomic observable measured at two times,
// assembled from a CNOT run and an anti-CNOT run postselected on the
// negative (system-undisturbed) result. Ordered (++, +-, -+, --) with the
// system prepared maximally mixed. axis is one of 'x', 'y', 'z'.
std::array<double, 4> inrm_joint_probs(double omega, double t_i, double t_j, char axis = 'x');

struct ElgiProbabilities {
    int n = 0;
    double omega = 0.0;
    double dt = 0.0;
    std::vector<std::array<double, 2>> single;          // P(Q(t_k)), k = 0..n-1
    std::vector<std::array<double, 4>> joint;           // all pairs k < l
    std::vector<std::pair<int, int>> pair_indices;      // (k, l) per joint entry

    const std::array<double, 4>& joint_for(int k, int l) const;
};

// Single-time tables via evolve-then-readout in the measurement basis, and
// all pairwise joint tables via the INRM circuit.
ElgiProbabilities elgi_probabilities(double omega, int n, double dt);

}  // namespace qcorr
