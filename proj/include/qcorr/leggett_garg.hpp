#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcorr/exec.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// n equally spaced measurements of a qubit precessing at omega, dt apart.
struct LgConfig {
    int n = 3;
    double omega = 1.0;
    double dt = 1.0;
};

void validate(const LgConfig& config);  // n in [3, 64], dt > 0

struct LgBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Macrorealist bounds: upper n-2; lower -n for odd n, -(n-2) for even n.
LgBounds lg_bounds(int n);

// cos(omega dt)
double ttcc_analytic(double omega, double dt);

// K_n = (n-1) cos(omega dt) - cos((n-1) omega dt)
double kn_analytic(const LgConfig& config);

// K_n assembled from Moussa-circuit TTCCs (or dephased TTCCs when t2 is
// given): C_12 + C_23 + ... + C_(n-1)n - C_1n.
double kn_circuit(const LgConfig& config, const DensityMatrix& rho_s,
                  std::optional<double> t2 = std::nullopt);

// Located maximum of K_n over the phase in [0, 2pi), grid plus one
// golden-section refinement.
double kn_max(int n, int resolution = 512);

struct ViolationRow {
    int n = 0;
    double phase = 0.0;  // omega dt
    double kn = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double margin = 0.0;  // positive = outside the macrorealist window
    bool violating = false;
};

// K_n against the macrorealist window for each n and each phase on a uniform
// grid over [0, 2pi). Boundary ties count as non-violating.
std::vector<ViolationRow> violation_map(int n_min, int n_max, int resolution,
                                        Exec exec = Exec::Parallel);

// H(joint) - H(marginal); throws if the marginal is inconsistent with the
// joint beyond 1e-9.
double conditional_entropy(const std::array<double, 4>& joint,
                           const std::array<double, 2>& marginal);

// Information deficit D_n = [(n-1) h(dt) - h((n-1) dt)] / log2(2s+1) with
// h(tau) = H(Q(tau)|Q(0)) extracted from the probability circuits. Only
// spin 1/2 is supported.
double elgi_deficit(const LgConfig& config, double spin = 0.5);

struct ElgiSweepRow {
    int n = 0;
    double theta = 0.0;  // (n-1) omega dt
    double deficit = 0.0;
};

// Deficit over theta on a uniform grid in [0, pi]. The theta = 0 endpoint is
// the exact limit value 0.
std::vector<ElgiSweepRow> elgi_sweep(int n, int points, Exec exec = Exec::Parallel);

// Exact information deficit of a stationary two-state Markov process with
// per-step flip probability q: nonnegative for every q and n.
double markov_deficit(int n, double flip_prob);

// K_n of an ensemble of predetermined +-1 outcome sequences generated by a
// hidden two-state trajectory with the given per-step flip probabilities.
// Never violates the macrorealist bounds.
double macrorealist_kn(int n, const std::vector<double>& flip_probs, int trials,
                       std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace qcorr
