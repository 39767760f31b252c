#include "qcorr/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

ProjectiveMeasurement make_projective(std::vector<ComplexMatrix> projectors) {
    if (projectors.empty()) throw std::invalid_argument("make_projective: no projectors");
    const int d = projectors.front().dim();
    ComplexMatrix sum(d);
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        const auto& p = projectors[i];
        if (p.dim() != d) throw std::invalid_argument("make_projective: mixed dimensions");
        if ((p * p).max_abs_diff(p) > 1e-10)
            throw std::invalid_argument("make_projective: projector " + std::to_string(i) +
                                        " is not idempotent");
        for (std::size_t j = 0; j < i; ++j)
            if ((p * projectors[j]).max_abs() > 1e-10)
                throw std::invalid_argument("make_projective: projectors " + std::to_string(i) + "," +
                                            std::to_string(j) + " are not orthogonal");
        sum += p;
    }
    if (sum.max_abs_diff(ComplexMatrix::identity(d)) > 1e-10)
        throw std::invalid_argument("make_projective: projectors do not sum to the identity");
    return ProjectiveMeasurement{std::move(projectors)};
}

ProjectiveMeasurement qubit_projectors(const BasisAngles& angles) {
    const double nx = std::sin(angles.theta) * std::cos(angles.phi);
    const double ny = std::sin(angles.theta) * std::sin(angles.phi);
    const double nz = std::cos(angles.theta);
    ComplexMatrix ns = sigma_x() * cplx{nx, 0.0};
    ns += sigma_y() * cplx{ny, 0.0};
    ns += sigma_z() * cplx{nz, 0.0};
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix up = (id + ns) * cplx{0.5, 0.0};
    ComplexMatrix dn = (id - ns) * cplx{0.5, 0.0};
    return ProjectiveMeasurement{{std::move(up), std::move(dn)}};
}

ProjectiveMeasurement lift_to_register(const ProjectiveMeasurement& m, int qubits, int target) {
    if (target < 0 || target >= qubits) throw std::invalid_argument("lift_to_register: bad target");
    ProjectiveMeasurement out;
    const int left = 1 << target;
    const int sub = m.projectors.front().dim();
    const int right = (1 << qubits) / (left * sub);
    if (right < 1) throw std::invalid_argument("lift_to_register: projector too large for register");
    for (const auto& p : m.projectors) {
        ComplexMatrix full = kron(ComplexMatrix::identity(left), p);
        full = kron(full, ComplexMatrix::identity(right));
        out.projectors.push_back(std::move(full));
    }
    return out;
}

MeasurementRecord measure(const DensityMatrix& rho, const ProjectiveMeasurement& basis) {
    if (basis.projectors.empty() || basis.projectors.front().dim() != rho.dim())
        throw std::invalid_argument("measure: basis dimension does not match state");
    MeasurementRecord rec;
    rec.basis = basis;
    double total = 0.0;
    for (const auto& p : basis.projectors) {
        const ComplexMatrix collapsed = p * rho.mat() * p;
        const double prob = collapsed.trace().real();
        rec.outcome_probs.push_back(prob);
        total += prob;
        if (prob > 1e-12) {
            ComplexMatrix normalized = collapsed * cplx{1.0 / prob, 0.0};
            rec.postmeasurement_states.emplace_back(DensityMatrix(rho.qubits(), std::move(normalized)));
        } else {
            rec.postmeasurement_states.emplace_back(std::nullopt);
        }
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::runtime_error("measure: outcome probabilities sum to " + std::to_string(total));
    return rec;
}

}  // namespace qcorr
