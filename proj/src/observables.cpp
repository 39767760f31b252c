#include "qcorr/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace qcorr {

namespace {

ComplexMatrix letter_matrix(PauliLetter l) {
    switch (l) {
        case PauliLetter::I: return ComplexMatrix::identity(2);
        case PauliLetter::X: return sigma_x();
        case PauliLetter::Y: return sigma_y();
        case PauliLetter::Z: return sigma_z();
    }
    throw std::logic_error("unreachable");
}

char letter_char(PauliLetter l) {
    switch (l) {
        case PauliLetter::I: return 'I';
        case PauliLetter::X: return 'X';
        case PauliLetter::Y: return 'Y';
        case PauliLetter::Z: return 'Z';
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ComplexMatrix PauliObservable::materialize() const {
    if (letters.empty()) throw std::invalid_argument("PauliObservable: no letters");
    if (sign != 1 && sign != -1) throw std::invalid_argument("PauliObservable: sign must be +-1");
    ComplexMatrix m = letter_matrix(letters[0]);
    for (std::size_t i = 1; i < letters.size(); ++i) m = kron(m, letter_matrix(letters[i]));
    if (sign < 0) m *= cplx{-1.0, 0.0};
    return m;
}

std::string PauliObservable::str() const {
    std::string s(1, sign < 0 ? '-' : '+');
    for (auto l : letters) s.push_back(letter_char(l));
    return s;
}

PauliObservable parse_pauli(const std::string& text) {
    PauliObservable o;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        o.sign = text[i] == '-' ? -1 : +1;
        ++i;
    }
    for (; i < text.size(); ++i) {
        switch (text[i]) {
            case 'I': o.letters.push_back(PauliLetter::I); break;
            case 'X': o.letters.push_back(PauliLetter::X); break;
            case 'Y': o.letters.push_back(PauliLetter::Y); break;
            case 'Z': o.letters.push_back(PauliLetter::Z); break;
            default:
                throw std::invalid_argument(std::string("parse_pauli: bad letter '") + text[i] + "'");
        }
    }
    if (o.letters.empty()) throw std::invalid_argument("parse_pauli: empty observable");
    if (o.letters.size() > 4) throw std::invalid_argument("parse_pauli: more than 4 qubits");
    return o;
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& obs) {
    if (obs.dim() != rho.dim())
        throw std::invalid_argument("expectation: observable dim " + std::to_string(obs.dim()) +
                                    " does not match state dim " + std::to_string(rho.dim()));
    if (!obs.is_hermitian(1e-10)) throw std::invalid_argument("expectation: observable is not Hermitian");
    const cplx t = (rho.mat() * obs).trace();
    if (std::abs(t.imag()) > 1e-10)
        throw std::runtime_error("expectation: imaginary part " + std::to_string(t.imag()));
    return t.real();
}

double expectation(const DensityMatrix& rho, const PauliObservable& obs) {
    return expectation(rho, obs.materialize());
}

namespace {

PauliObservable pauli2(PauliLetter a, PauliLetter b, int sign = +1) {
    PauliObservable o;
    o.sign = sign;
    o.letters = {a, b};
    return o;
}

}  // namespace

MerminSquare mermin_square() {
    using L = PauliLetter;
    MerminSquare sq;
    sq.grid[0] = {pauli2(L::Z, L::I), pauli2(L::I, L::Z), pauli2(L::Z, L::Z)};
    sq.grid[1] = {pauli2(L::I, L::X), pauli2(L::X, L::I), pauli2(L::X, L::X)};
    sq.grid[2] = {pauli2(L::Z, L::X), pauli2(L::X, L::Z), pauli2(L::Y, L::Y)};
    return sq;
}

PseudoSpinSet pseudo_spin_set() {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    PseudoSpinSet s;
    s.gamma[0] = kron(sigma_x(), id);
    s.gamma[1] = kron(sigma_z(), sigma_y());
    s.gamma[2] = kron(sigma_y(), sigma_y()) * cplx{-1.0, 0.0};
    s.gamma_prime[0] = kron(sigma_x(), sigma_z());
    s.gamma_prime[1] = kron(id, sigma_y());
    s.gamma_prime[2] = kron(sigma_x(), sigma_x()) * cplx{-1.0, 0.0};
    return s;
}

ChshObservables chsh_observables(double beta, double eta) {
    const PseudoSpinSet s = pseudo_spin_set();
    ChshObservables o;
    o.a = s.gamma[0];
    o.b = s.gamma_prime[0] * cplx{std::cos(beta), 0.0} + s.gamma_prime[2] * cplx{std::sin(beta), 0.0};
    o.c = s.gamma[2];
    o.d = s.gamma_prime[0] * cplx{std::cos(eta), 0.0} + s.gamma_prime[2] * cplx{std::sin(eta), 0.0};
    return o;
}

double chsh_value(const DensityMatrix& rho, double beta, double eta) {
    if (rho.qubits() != 2) throw std::invalid_argument("chsh_value: two-qubit states only");
    const ChshObservables o = chsh_observables(beta, eta);
    ComplexMatrix string_op = o.a * o.b;
    string_op += o.b * o.c;
    string_op += o.c * o.d;
    string_op -= o.a * o.d;
    const cplx t = (rho.mat() * string_op).trace();
    return t.real();
}

}  // namespace qcorr
