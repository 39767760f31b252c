#include "qcorr/circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcorr {

Gate Gate::cnot(int control, int target) {
    Gate g;
    g.kind = Kind::Cnot;
    g.q0 = control;
    g.q1 = target;
    return g;
}

Gate Gate::anti_cnot(int control, int target) {
    Gate g;
    g.kind = Kind::AntiCnot;
    g.q0 = control;
    g.q1 = target;
    return g;
}

Gate Gate::rotation(int qubit, char axis, double angle) {
    if (axis != 'x' && axis != 'y' && axis != 'z')
        throw std::invalid_argument("Gate::rotation: axis must be x, y or z");
    Gate g;
    g.kind = Kind::AxisRotation;
    g.q0 = qubit;
    g.axis = axis;
    g.angle = angle;
    return g;
}

Gate Gate::free_precession(int qubit, double omega, double duration) {
    Gate g;
    g.kind = Kind::FreePrecession;
    g.q0 = qubit;
    g.omega = omega;
    g.duration = duration;
    return g;
}

Gate Gate::dephase(int qubit, double strength) {
    if (strength < 0.0 || strength > 1.0)
        throw std::invalid_argument("Gate::dephase: strength must be in [0, 1]");
    Gate g;
    g.kind = Kind::Dephase;
    g.q0 = qubit;
    g.strength = strength;
    return g;
}

Gate Gate::controlled_u(int control, int target, ComplexMatrix u) {
    if (u.dim() != 2) throw std::invalid_argument("Gate::controlled_u: payload must be 2x2");
    if ((u * u.adjoint()).max_abs_diff(ComplexMatrix::identity(2)) > 1e-10)
        throw std::invalid_argument("Gate::controlled_u: payload is not unitary");
    Gate g;
    g.kind = Kind::ControlledU;
    g.q0 = control;
    g.q1 = target;
    g.u = std::move(u);
    return g;
}

std::vector<ComplexMatrix> dephase_kraus(double strength) {
    if (strength < 0.0 || strength > 1.0)
        throw std::invalid_argument("dephase_kraus: strength must be in [0, 1]");
    std::vector<ComplexMatrix> ks;
    ks.push_back(ComplexMatrix::identity(2) * cplx{std::sqrt(1.0 - strength), 0.0});
    ks.push_back(sigma_z() * cplx{std::sqrt(strength), 0.0});
    return ks;
}

namespace {

ComplexMatrix axis_matrix(char axis) {
    switch (axis) {
        case 'x': return sigma_x();
        case 'y': return sigma_y();
        case 'z': return sigma_z();
        default: throw std::invalid_argument("axis must be x, y or z");
    }
}

// exp(-i angle/2 sigma_axis)
ComplexMatrix rotation_matrix(char axis, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    ComplexMatrix m = ComplexMatrix::identity(2) * cplx{c, 0.0};
    m += axis_matrix(axis) * cplx{0.0, -s};
    return m;
}

ComplexMatrix embed_single(int qubits, int qubit, const ComplexMatrix& u) {
    if (qubit < 0 || qubit >= qubits) throw std::invalid_argument("gate qubit index out of range");
    const int left = 1 << qubit;
    const int right = 1 << (qubits - qubit - 1);
    ComplexMatrix m = kron(ComplexMatrix::identity(left), u);
    return kron(m, ComplexMatrix::identity(right));
}

// P_trigger(control) x U(target) + P_other(control) x I
ComplexMatrix embed_controlled(int qubits, int control, int target, const ComplexMatrix& u,
                               int trigger) {
    if (control == target) throw std::invalid_argument("controlled gate needs distinct qubits");
    ComplexMatrix p_trig(2), p_pass(2);
    p_trig(trigger, trigger) = 1.0;
    p_pass(1 - trigger, 1 - trigger) = 1.0;
    ComplexMatrix active = embed_single(qubits, control, p_trig) * embed_single(qubits, target, u);
    ComplexMatrix passive = embed_single(qubits, control, p_pass);
    return active + passive;
}

}  // namespace

ComplexMatrix gate_matrix(const Gate& g, int qubits) {
    switch (g.kind) {
        case Gate::Kind::Cnot: return embed_controlled(qubits, g.q0, g.q1, sigma_x(), 1);
        case Gate::Kind::AntiCnot: return embed_controlled(qubits, g.q0, g.q1, sigma_x(), 0);
        case Gate::Kind::AxisRotation:
            return embed_single(qubits, g.q0, rotation_matrix(g.axis, g.angle));
        case Gate::Kind::FreePrecession:
            return embed_single(qubits, g.q0, rotation_matrix('z', g.omega * g.duration));
        case Gate::Kind::ControlledU: return embed_controlled(qubits, g.q0, g.q1, g.u, 1);
        case Gate::Kind::Dephase:
            throw std::invalid_argument("gate_matrix: Dephase is a channel, not a unitary");
    }
    throw std::logic_error("unreachable");
}

DensityMatrix apply(const Circuit& circuit, const DensityMatrix& rho) {
    if (circuit.qubits != rho.qubits())
        throw std::invalid_argument("apply: circuit register size does not match state");
    ComplexMatrix m = rho.mat();
    for (const auto& g : circuit.gates) {
        if (g.q0 < 0 || g.q0 >= circuit.qubits ||
            ((g.kind == Gate::Kind::Cnot || g.kind == Gate::Kind::AntiCnot ||
              g.kind == Gate::Kind::ControlledU) &&
             (g.q1 < 0 || g.q1 >= circuit.qubits)))
            throw std::invalid_argument("apply: gate index out of range");
        if (g.kind == Gate::Kind::Dephase) {
            ComplexMatrix next(m.dim());
            for (const auto& k : dephase_kraus(g.strength)) {
                const ComplexMatrix kf = embed_single(circuit.qubits, g.q0, k);
                next += kf * m * kf.adjoint();
            }
            m = std::move(next);
        } else {
            const ComplexMatrix u = gate_matrix(g, circuit.qubits);
            m = u * m * u.adjoint();
        }
    }
    return DensityMatrix(rho.qubits(), m);
}

std::string to_text(const Circuit& circuit) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case Gate::Kind::Cnot: os << "CNOT " << g.q0 << ' ' << g.q1; break;
            case Gate::Kind::AntiCnot: os << "ACNOT " << g.q0 << ' ' << g.q1; break;
            case Gate::Kind::AxisRotation:
                os << 'R' << static_cast<char>(g.axis - 'a' + 'A') << ' ' << g.q0 << ' ' << g.angle;
                break;
            case Gate::Kind::FreePrecession:
                os << "FREE " << g.q0 << " omega=" << g.omega << " t=" << g.duration;
                break;
            case Gate::Kind::Dephase: os << "DEPHASE " << g.q0 << ' ' << g.strength; break;
            case Gate::Kind::ControlledU:
                os << "CU " << g.q0 << ' ' << g.q1;
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c)
                        os << ' ' << g.u(r, c).real() << ' ' << g.u(r, c).imag();
                break;
        }
        os << '\n';
    }
    return os.str();
}

Circuit from_text(const std::string& text) {
    Circuit circuit;
    std::istringstream is(text);
    std::string line;
    int max_index = -1;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string op;
        ls >> op;
        Gate g;
        if (op == "CNOT" || op == "ACNOT") {
            int c, t;
            if (!(ls >> c >> t)) throw std::invalid_argument("bad gate line: " + line);
            g = op == "CNOT" ? Gate::cnot(c, t) : Gate::anti_cnot(c, t);
            max_index = std::max({max_index, c, t});
        } else if (op == "RX" || op == "RY" || op == "RZ") {
            int q;
            double angle;
            if (!(ls >> q >> angle)) throw std::invalid_argument("bad gate line: " + line);
            g = Gate::rotation(q, static_cast<char>(op[1] - 'A' + 'a'), angle);
            max_index = std::max(max_index, q);
        } else if (op == "FREE") {
            int q;
            std::string wtok, ttok;
            if (!(ls >> q >> wtok >> ttok) || wtok.rfind("omega=", 0) != 0 || ttok.rfind("t=", 0) != 0)
                throw std::invalid_argument("bad gate line: " + line);
            g = Gate::free_precession(q, std::stod(wtok.substr(6)), std::stod(ttok.substr(2)));
            max_index = std::max(max_index, q);
        } else if (op == "DEPHASE") {
            int q;
            double p;
            if (!(ls >> q >> p)) throw std::invalid_argument("bad gate line: " + line);
            g = Gate::dephase(q, p);
            max_index = std::max(max_index, q);
        } else if (op == "CU") {
            int c, t;
            double v[8];
            if (!(ls >> c >> t >> v[0] >> v[1] >> v[2] >> v[3] >> v[4] >> v[5] >> v[6] >> v[7]))
                throw std::invalid_argument("bad gate line: " + line);
            ComplexMatrix u(2, {cplx{v[0], v[1]}, cplx{v[2], v[3]}, cplx{v[4], v[5]}, cplx{v[6], v[7]}});
            g = Gate::controlled_u(c, t, std::move(u));
            max_index = std::max({max_index, c, t});
        } else {
            throw std::invalid_argument("unknown gate '" + op + "'");
        }
        circuit.gates.push_back(std::move(g));
    }
    if (max_index < 0) throw std::invalid_argument("from_text: no gates");
    circuit.qubits = max_index + 1;
    return circuit;
}

// --- Measurement protocols ---------------------------------------------

namespace {

DensityMatrix plus_state() {
    const double s = 1.0 / std::sqrt(2.0);
    return pure({cplx{s, 0.0}, cplx{s, 0.0}});
}

// Rotation that maps the observable axis onto z: V sigma_axis V^dagger = sigma_z.
Gate basis_change(int qubit, char axis, bool undo) {
    switch (axis) {
        case 'x': return Gate::rotation(qubit, 'y', undo ? M_PI / 2.0 : -M_PI / 2.0);
        case 'y': return Gate::rotation(qubit, 'x', undo ? -M_PI / 2.0 : M_PI / 2.0);
        case 'z': return Gate::rotation(qubit, 'z', 0.0);
        default: throw std::invalid_argument("observable axis must be x, y or z");
    }
}

double ancilla_sigma_x(const DensityMatrix& out) {
    const int rest = out.dim() / 2;
    ComplexMatrix obs = kron(sigma_x(), ComplexMatrix::identity(rest));
    return (out.mat() * obs).trace().real();
}

}  // namespace

double moussa_ttcc(double omega, double t_i, double t_j, const DensityMatrix& rho_s) {
    if (rho_s.qubits() != 1) throw std::invalid_argument("moussa_ttcc: system must be one qubit");
    if (t_j < t_i) throw std::invalid_argument("moussa_ttcc: t_j must not precede t_i");
    Circuit c;
    c.qubits = 2;
    c.gates = {Gate::controlled_u(0, 1, sigma_x()),
               Gate::free_precession(1, omega, t_j - t_i),
               Gate::controlled_u(0, 1, sigma_x())};
    const DensityMatrix in(2, kron(plus_state().mat(), rho_s.mat()));
    return ancilla_sigma_x(apply(c, in));
}

double dephase_ttcc(double omega, double t_i, double t_j, double t2) {
    if (t2 <= 0.0) throw std::invalid_argument("dephase_ttcc: t2 must be positive");
    if (t_j < t_i) throw std::invalid_argument("dephase_ttcc: t_j must not precede t_i");
    const double dt = t_j - t_i;
    const double strength = (1.0 - std::exp(-dt / t2)) / 2.0;
    Circuit c;
    c.qubits = 2;
    c.gates = {Gate::controlled_u(0, 1, sigma_x()),
               Gate::free_precession(1, omega, dt),
               Gate::dephase(1, strength),
               Gate::controlled_u(0, 1, sigma_x())};
    const DensityMatrix in(2, kron(plus_state().mat(), maximally_mixed(1).mat()));
    return ancilla_sigma_x(apply(c, in));
}

double moussa_row_expectation(const DensityMatrix& rho, const std::array<PauliObservable, 3>& triple) {
    if (rho.qubits() != 2) throw std::invalid_argument("moussa_row_expectation: two-qubit states only");
    std::array<ComplexMatrix, 3> mats;
    for (int i = 0; i < 3; ++i) {
        if (triple[i].letters.size() != 2)
            throw std::invalid_argument("moussa_row_expectation: observables must be two-qubit");
        mats[i] = triple[i].materialize();
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if ((mats[i] * mats[j] - mats[j] * mats[i]).max_abs() > 1e-12)
                throw std::invalid_argument("moussa_row_expectation: observables " + triple[i].str() +
                                            " and " + triple[j].str() + " do not commute");

    Circuit c;
    c.qubits = 3;
    for (const auto& obs : triple) {
        for (int k = 0; k < 2; ++k) {
            if (obs.letters[k] == PauliLetter::I) continue;
            PauliObservable single{+1, {obs.letters[k]}};
            c.gates.push_back(Gate::controlled_u(0, 1 + k, single.materialize()));
        }
        // A negative sign is a controlled phase flip, i.e. Z on the ancilla.
        if (obs.sign < 0) c.gates.push_back(Gate::rotation(0, 'z', M_PI));
    }
    const DensityMatrix in(3, kron(plus_state().mat(), rho.mat()));
    return ancilla_sigma_x(apply(c, in));
}

std::array<double, 4> inrm_joint_probs(double omega, double t_i, double t_j, char axis) {
    if (t_j < t_i) throw std::invalid_argument("inrm_joint_probs: t_j must not precede t_i");

    // One run per coupling flavor; ancilla is qubit 0 in |0>, system qubit 1
    // starts maximally mixed and is read in the observable eigenbasis.
    auto run = [&](bool anti) {
        Circuit c;
        c.qubits = 2;
        c.gates.push_back(Gate::free_precession(1, omega, t_i));
        c.gates.push_back(basis_change(1, axis, false));
        c.gates.push_back(anti ? Gate::anti_cnot(1, 0) : Gate::cnot(1, 0));
        c.gates.push_back(basis_change(1, axis, true));
        c.gates.push_back(Gate::free_precession(1, omega, t_j - t_i));
        c.gates.push_back(basis_change(1, axis, false));
        DensityMatrix ket0 = pure({cplx{1.0, 0.0}, cplx{0.0, 0.0}});
        const DensityMatrix in(2, kron(ket0.mat(), maximally_mixed(1).mat()));
        const DensityMatrix out = apply(c, in);
        std::array<double, 2> kept{};  // ancilla == 0 rows, by system outcome
        for (int s = 0; s < 2; ++s) kept[s] = out.mat()(s, s).real();
        return kept;
    };

    const auto cnot_rows = run(false);   // negative result <=> Q(t_i) = +1
    const auto acnot_rows = run(true);   // negative result <=> Q(t_i) = -1
    const double p_plus = cnot_rows[0] + cnot_rows[1];
    const double p_minus = acnot_rows[0] + acnot_rows[1];
    if (p_plus < 1e-12 || p_minus < 1e-12)
        throw std::runtime_error("inrm_joint_probs: postselection subspace probability below 1e-12");

    // Conditional tables renormalized by the subspace probability and then
    // reweighted by it; the two factors cancel, leaving the kept rows. The
    // subspace weights of the two runs are complementary.
    return {cnot_rows[0], cnot_rows[1], acnot_rows[0], acnot_rows[1]};
}

const std::array<double, 4>& ElgiProbabilities::joint_for(int k, int l) const {
    for (std::size_t i = 0; i < pair_indices.size(); ++i)
        if (pair_indices[i].first == k && pair_indices[i].second == l) return joint[i];
    throw std::invalid_argument("ElgiProbabilities: no such pair");
}

ElgiProbabilities elgi_probabilities(double omega, int n, double dt) {
    if (n < 3) throw std::invalid_argument("elgi_probabilities: n must be at least 3");
    if (dt <= 0.0) throw std::invalid_argument("elgi_probabilities: dt must be positive");
    ElgiProbabilities out;
    out.n = n;
    out.omega = omega;
    out.dt = dt;

    for (int k = 0; k < n; ++k) {
        Circuit c;
        c.qubits = 1;
        c.gates.push_back(Gate::free_precession(0, omega, k * dt));
        c.gates.push_back(basis_change(0, 'x', false));
        const DensityMatrix st = apply(c, maximally_mixed(1));
        out.single.push_back({st.mat()(0, 0).real(), st.mat()(1, 1).real()});
    }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            out.joint.push_back(inrm_joint_probs(omega, k * dt, l * dt, 'x'));
            out.pair_indices.emplace_back(k, l);
        }
    return out;
}

}  // namespace qcorr
