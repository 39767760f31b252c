#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qcorr/exec.hpp"
#include "qcorr/observables.hpp"

namespace qcorr {

// beta = <pi_r1> + <pi_r2> + <pi_r3> + <pi_c1> + <pi_c2> - <pi_c3>, each line
// measured through the ancilla-assisted product-measurement circuit. The
// quantum value is 6 for every state; the noncontextual bound is 4.
double cabello_beta(const DensityMatrix& rho);

// Same sum with each line expectation scaled by a uniform visibility factor,
// modeling depolarized line measurements.
double cabello_beta_with_visibility(const DensityMatrix& rho, double visibility);

struct AssignmentSearchResult {
    int total_assignments = 0;
    int satisfying = 0;
    int max_satisfiable_constraints = 0;
    std::optional<std::array<int, 9>> witness;  // a satisfying assignment, if any
};

// Exhaustive search over all 2^9 sign assignments to the square against the
// canonical product constraints (+1, +1, +1 rows; +1, +1, -1 columns).
AssignmentSearchResult noncontextual_assignment_search();

// Same search with caller-chosen target signs (rows then columns).
AssignmentSearchResult noncontextual_assignment_search(const std::array<int, 6>& targets);

struct PeresSingletReport {
    double xx = 0.0;      // <sigma_1x sigma_2x>
    double yy = 0.0;      // <sigma_1y sigma_2y>
    double zz = 0.0;      // <sigma_1z sigma_2z>
    double xy_yx = 0.0;   // <(sigma_1x sigma_2y)(sigma_1y sigma_2x)>
};

// The four singlet expectations behind the Peres contradiction:
// x1 x2 = y1 y2 = -1 yet x1 y2 y1 x2 = -1.
PeresSingletReport peres_singlet_report();

struct ChshScanResult {
    int state_index = -1;
    double beta = 0.0;
    double eta = 0.0;
    double value = 0.0;
};

// Maximizes chsh_value over a uniform angle grid in [0, 2pi)^2 per state,
// followed by one golden-section refinement pass per variable.
ChshScanResult qho_chsh_scan(const std::vector<DensityMatrix>& states, int grid_resolution,
                             Exec exec = Exec::Parallel);

// The four maximally entangled states of the pseudo-spin (Gamma x Gamma')
// factorization: joint eigenstates of Gz Gz' and Gx Gx', which coincide with
// the computational basis states. Product states physically, Bell states of
// the pseudo-spins.
std::vector<DensityMatrix> pseudo_spin_bell_states();

}  // namespace qcorr
