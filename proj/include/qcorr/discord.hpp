#pragma once

#include <cstdint>
#include <vector>

#include "qcorr/exec.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class Side { A, B };

// I(A:B) = S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_info(const DensityMatrix& rho);

struct SearchParams {
    int grid_theta = 64;
    int grid_phi = 128;
    int refine_from = 5;        // local refinement seeded from the best cells
    double simplex_tol = 1e-7;  // Nelder-Mead simplex diameter
    int max_iter = 2000;
    Exec exec = Exec::Parallel;
};

struct ClassicalCorrelation {
    double value = 0.0;
    BasisAngles argmax;
};

// max over single-qubit projective bases on the measured side of
// S(rho_unmeasured) - sum_i p_i S(rho_unmeasured | i). Grid search plus
// Nelder-Mead refinement; the located maximum is a lower bound on the
// true supremum.
ClassicalCorrelation classical_correlation(const DensityMatrix& rho, Side measured,
                                           const SearchParams& params = {});

struct DiscordResult {
    double mutual_info = 0.0;
    double classical_corr = 0.0;
    double discord = 0.0;
    BasisAngles argmax;
};

// D(B|A) for measured == Side::A, D(A|B) for Side::B.
DiscordResult discord(const DensityMatrix& rho, Side measured = Side::A,
                      const SearchParams& params = {});

// Closed-form Bell-diagonal discord:
// 2 + sum_i lambda_i log2 lambda_i - ((1-r)/2) log2(1-r) - ((1+r)/2) log2(1+r),
// r = max |r_i|, with the 0 log 0 convention at the edges.
double bd_discord_analytic(const BellDiagonalParams& params);

// Bell-diagonal closed form at r = (-eps, -eps, -eps).
double werner_discord(double eps);

// D^G(B|A) = (||x||^2 + ||T||^2 - eta_max)/4 with eta_max the largest
// eigenvalue of x x^T + T T^T.
double geometric_discord(const DensityMatrix& rho);

// Numerical minimum of ||rho - chi||^2 over the classical family
// chi = p P1 x rho_1 + (1-p) P2 x rho_2 (multi-start local search). An upper
// bound on the geometric discord.
double nearest_classical_check(const DensityMatrix& rho, int samples = 32,
                               std::uint64_t seed = 0x9cc0d15ULL);

struct PuritySweepRow {
    double eps = 0.0;
    double d_w = 0.0;   // Werner discord, closed form
    double d_g = 0.0;   // geometric discord via the Bloch formula
    double gap = 0.0;   // |d_w - 2 d_g|
};

std::vector<PuritySweepRow> discord_vs_purity_sweep(const std::vector<double>& eps_grid,
                                                    Exec exec = Exec::Parallel);

}  // namespace qcorr
