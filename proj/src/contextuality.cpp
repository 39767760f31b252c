#include "qcorr/contextuality.hpp"

#include <cmath>
#include <stdexcept>

#include "qcorr/circuit.hpp"
#include "qcorr/optimize.hpp"

namespace qcorr {

namespace {

// The six measurement lines of the square: rows 0..2, then columns 0..2.
std::array<std::array<PauliObservable, 3>, 6> square_lines() {
    const MerminSquare sq = mermin_square();
    std::array<std::array<PauliObservable, 3>, 6> lines;
    for (int i = 0; i < 3; ++i) lines[i] = sq.row(i);
    for (int j = 0; j < 3; ++j) lines[3 + j] = sq.column(j);
    return lines;
}

constexpr std::array<int, 6> kLineSigns{+1, +1, +1, +1, +1, -1};

}  // namespace

double cabello_beta(const DensityMatrix& rho) { return cabello_beta_with_visibility(rho, 1.0); }

double cabello_beta_with_visibility(const DensityMatrix& rho, double visibility) {
    const auto lines = square_lines();
    double beta = 0.0;
    for (int i = 0; i < 6; ++i)
        beta += kLineSigns[i] * visibility * moussa_row_expectation(rho, lines[i]);
    return beta;
}

AssignmentSearchResult noncontextual_assignment_search() {
    return noncontextual_assignment_search({+1, +1, +1, +1, +1, -1});
}

AssignmentSearchResult noncontextual_assignment_search(const std::array<int, 6>& targets) {
    AssignmentSearchResult res;
    res.total_assignments = 1 << 9;
    for (int mask = 0; mask < (1 << 9); ++mask) {
        std::array<int, 9> v;  // cell (i, j) -> v[3i + j]
        for (int b = 0; b < 9; ++b) v[b] = (mask >> b) & 1 ? -1 : +1;
        int satisfied = 0;
        for (int i = 0; i < 3; ++i)
            if (v[3 * i] * v[3 * i + 1] * v[3 * i + 2] == targets[i]) ++satisfied;
        for (int j = 0; j < 3; ++j)
            if (v[j] * v[3 + j] * v[6 + j] == targets[3 + j]) ++satisfied;
        res.max_satisfiable_constraints = std::max(res.max_satisfiable_constraints, satisfied);
        if (satisfied == 6) {
            ++res.satisfying;
            if (!res.witness) res.witness = v;
        }
    }
    return res;
}

PeresSingletReport peres_singlet_report() {
    const DensityMatrix singlet = pure(ket_singlet());
    PeresSingletReport rep;
    rep.xx = expectation(singlet, parse_pauli("+XX"));
    rep.yy = expectation(singlet, parse_pauli("+YY"));
    rep.zz = expectation(singlet, parse_pauli("+ZZ"));
    const ComplexMatrix product = parse_pauli("+XY").materialize() * parse_pauli("+YX").materialize();
    rep.xy_yx = expectation(singlet, product);
    return rep;
}

ChshScanResult qho_chsh_scan(const std::vector<DensityMatrix>& states, int grid_resolution,
                             Exec exec) {
    if (states.empty()) throw std::invalid_argument("qho_chsh_scan: empty state list");
    if (grid_resolution < 2) throw std::invalid_argument("qho_chsh_scan: resolution must be >= 2");
    for (const auto& s : states)
        if (s.qubits() != 2) throw std::invalid_argument("qho_chsh_scan: states must be two-qubit");

    const int res = grid_resolution;
    const double step = 2.0 * M_PI / res;
    const std::size_t cells = static_cast<std::size_t>(states.size()) * res * res;
    std::vector<double> values(cells);
    for_each_index(cells, exec, [&](std::size_t idx) {
        const std::size_t per_state = static_cast<std::size_t>(res) * res;
        const int s = static_cast<int>(idx / per_state);
        const int cell = static_cast<int>(idx % per_state);
        const double beta = (cell / res) * step;
        const double eta = (cell % res) * step;
        values[idx] = chsh_value(states[s], beta, eta);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < cells; ++i)
        if (values[i] > values[best]) best = i;

    const std::size_t per_state = static_cast<std::size_t>(res) * res;
    ChshScanResult out;
    out.state_index = static_cast<int>(best / per_state);
    double beta = ((best % per_state) / res) * step;
    double eta = ((best % per_state) % res) * step;
    const DensityMatrix& rho = states[out.state_index];

    // One golden-section pass per variable around the best cell.
    auto [b2, v1] = golden_section_max([&](double b) { return chsh_value(rho, b, eta); },
                                       beta - step, beta + step);
    beta = b2;
    auto [e2, v2] = golden_section_max([&](double e) { return chsh_value(rho, beta, e); },
                                       eta - step, eta + step);
    eta = e2;

    out.beta = beta;
    out.eta = eta;
    out.value = chsh_value(rho, beta, eta);
    return out;
}

std::vector<DensityMatrix> pseudo_spin_bell_states() {
    std::vector<DensityMatrix> states;
    for (int i = 0; i < 4; ++i) states.push_back(pure(ket_basis(2, i)));
    return states;
}

}  // namespace qcorr
