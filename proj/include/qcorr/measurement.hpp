#pragma once

#include <optional>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

// Qubit measurement direction (sin t cos p, sin t sin p, cos t) on the Bloch
// sphere; theta in [0, pi], phi in [0, 2 pi).
struct BasisAngles {
    double theta = 0.0;
    double phi = 0.0;
};

// Complete set of orthogonal projectors: each idempotent, mutually
// orthogonal, summing to the identity (all within 1e-10).
struct ProjectiveMeasurement {
    std::vector<ComplexMatrix> projectors;
};

// Validates the invariants and throws std::invalid_argument on violation.
ProjectiveMeasurement make_projective(std::vector<ComplexMatrix> projectors);

// The pair {P(+n), P(-n)} with P = (I +- n.sigma)/2 for the given angles.
ProjectiveMeasurement qubit_projectors(const BasisAngles& angles);

// Embeds single-qubit projectors on one qubit of an n-qubit register.
ProjectiveMeasurement lift_to_register(const ProjectiveMeasurement& m, int qubits, int target);

struct MeasurementRecord {
    ProjectiveMeasurement basis;
    std::vector<double> outcome_probs;
    // Lueders post-measurement states; empty where the outcome probability
    // is below 1e-12.
    std::vector<std::optional<DensityMatrix>> postmeasurement_states;
};

MeasurementRecord measure(const DensityMatrix& rho, const ProjectiveMeasurement& basis);

}  // namespace qcorr
