#include "qcorr/discord.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qcorr/optimize.hpp"

namespace qcorr {

double mutual_info(const DensityMatrix& rho) {
    if (rho.qubits() != 2) throw std::invalid_argument("mutual_info: two-qubit states only");
    const ComplexMatrix ra = partial_trace(rho.mat(), 2, 2, 0);
    const ComplexMatrix rb = partial_trace(rho.mat(), 2, 2, 1);
    return von_neumann_entropy(ra) + von_neumann_entropy(rb) - von_neumann_entropy(rho.mat());
}

namespace {

BasisAngles canonical_angles(double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    BasisAngles a;
    a.theta = std::acos(std::clamp(nz, -1.0, 1.0));
    a.phi = std::atan2(ny, nx);
    if (a.phi < 0.0) a.phi += 2.0 * M_PI;
    return a;
}

// S(rho_unmeasured) - sum_i p_i S(rho_unmeasured | i) for projectors along
// (theta, phi) on the measured qubit.
double holevo_like_j(const DensityMatrix& rho, Side measured, double s_unmeasured, double theta,
                     double phi) {
    const int mq = measured == Side::A ? 0 : 1;
    const int keep = measured == Side::A ? 1 : 0;
    const ProjectiveMeasurement local = qubit_projectors({theta, phi});
    const ProjectiveMeasurement lifted = lift_to_register(local, 2, mq);
    double conditional = 0.0;
    for (const auto& p : lifted.projectors) {
        const ComplexMatrix collapsed = p * rho.mat() * p;
        const double prob = collapsed.trace().real();
        if (prob < 1e-14) continue;
        ComplexMatrix reduced = partial_trace(collapsed, 2, 2, keep);
        reduced *= cplx{1.0 / prob, 0.0};
        conditional += prob * von_neumann_entropy(reduced);
    }
    return s_unmeasured - conditional;
}

}  // namespace

ClassicalCorrelation classical_correlation(const DensityMatrix& rho, Side measured,
                                           const SearchParams& params) {
    if (rho.qubits() != 2) throw std::invalid_argument("classical_correlation: two-qubit states only");
    if (params.grid_theta < 2 || params.grid_phi < 2)
        throw std::invalid_argument("classical_correlation: grid must be at least 2x2");

    const int keep = measured == Side::A ? 1 : 0;
    const double s_unmeasured = von_neumann_entropy(partial_trace(rho.mat(), 2, 2, keep));

    const int gt = params.grid_theta, gp = params.grid_phi;
    const double dtheta = M_PI / gt;
    const double dphi = 2.0 * M_PI / gp;
    std::vector<double> values(static_cast<std::size_t>(gt) * gp);
    for_each_index(values.size(), params.exec, [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / gp;
        const int j = static_cast<int>(idx) % gp;
        const double theta = (i + 0.5) * dtheta;  // cell centers; poles are basis-degenerate
        const double phi = j * dphi;
        values[idx] = holevo_like_j(rho, measured, s_unmeasured, theta, phi);
    });

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return a < b;
    });

    double best_value = values[order[0]];
    double best_theta = (static_cast<int>(order[0]) / gp + 0.5) * dtheta;
    double best_phi = (static_cast<int>(order[0]) % gp) * dphi;

    const int starts = std::min<int>(params.refine_from, static_cast<int>(order.size()));
    for (int s = 0; s < starts; ++s) {
        const double theta0 = (static_cast<int>(order[s]) / gp + 0.5) * dtheta;
        const double phi0 = (static_cast<int>(order[s]) % gp) * dphi;
        const auto result = nelder_mead_min(
            [&](const std::vector<double>& x) {
                return -holevo_like_j(rho, measured, s_unmeasured, x[0], x[1]);
            },
            {theta0, phi0}, 0.5 * dtheta, params.simplex_tol, params.max_iter);
        if (-result.value > best_value) {
            best_value = -result.value;
            best_theta = result.x[0];
            best_phi = result.x[1];
        }
    }

    ClassicalCorrelation out;
    out.value = best_value;
    out.argmax = canonical_angles(best_theta, best_phi);
    return out;
}

DiscordResult discord(const DensityMatrix& rho, Side measured, const SearchParams& params) {
    DiscordResult r;
    r.mutual_info = mutual_info(rho);
    const ClassicalCorrelation c = classical_correlation(rho, measured, params);
    r.classical_corr = c.value;
    r.argmax = c.argmax;
    r.discord = r.mutual_info - r.classical_corr;
    return r;
}

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

double bd_discord_analytic(const BellDiagonalParams& params) {
    const double r1 = params.r[0], r2 = params.r[1], r3 = params.r[2];
    const double lambdas[4] = {
        (1.0 - r1 - r2 - r3) / 4.0,  // psi-
        (1.0 - r1 + r2 + r3) / 4.0,  // phi-
        (1.0 + r1 - r2 + r3) / 4.0,  // phi+
        (1.0 + r1 + r2 - r3) / 4.0,  // psi+
    };
    for (double l : lambdas)
        if (l < -1e-9 || l > 1.0 + 1e-9)
            throw std::invalid_argument("bd_discord_analytic: spectrum outside [0, 1]");
    const double r = std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
    double d = 2.0;
    for (double l : lambdas) d += xlog2x(std::max(l, 0.0));
    const auto half_term = [](double v) { return v > 0.0 ? (v / 2.0) * std::log2(v) : 0.0; };
    d -= half_term(1.0 - r);
    d -= half_term(1.0 + r);
    return d;
}

double werner_discord(double eps) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("werner_discord: eps must be in [0, 1]");
    return bd_discord_analytic({{-eps, -eps, -eps}});
}

double geometric_discord(const DensityMatrix& rho) {
    if (rho.qubits() != 2) throw std::invalid_argument("geometric_discord: two-qubit states only");
    const BlochForm b = bloch_decompose(rho);
    double x2 = 0.0, t2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        x2 += b.x[i] * b.x[i];
        for (int j = 0; j < 3; ++j) t2 += b.T[i][j] * b.T[i][j];
    }
    // eta_max of the 3x3 real symmetric matrix x x^T + T T^T
    ComplexMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double v = b.x[i] * b.x[j];
            for (int k = 0; k < 3; ++k) v += b.T[i][k] * b.T[j][k];
            m(i, j) = v;
        }
    const auto eig = hermitian_eig(m);
    const double eta_max = eig.eigenvalues.back();
    return 0.25 * (x2 + t2 - eta_max);
}

namespace {

struct ClassicalFamilyPoint {
    double theta = 0.0, phi = 0.0, p = 0.5;
    std::array<double, 3> b1{}, b2{};
};

ComplexMatrix bloch_qubit(const std::array<double, 3>& b) {
    double norm = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    const double scale = norm > 1.0 ? 1.0 / norm : 1.0;  // clamp into the Bloch ball
    ComplexMatrix m = ComplexMatrix::identity(2) * cplx{0.5, 0.0};
    m += sigma_x() * cplx{0.5 * scale * b[0], 0.0};
    m += sigma_y() * cplx{0.5 * scale * b[1], 0.0};
    m += sigma_z() * cplx{0.5 * scale * b[2], 0.0};
    return m;
}

ComplexMatrix classical_family(const std::vector<double>& v) {
    const double p = std::clamp(v[2], 0.0, 1.0);
    const ProjectiveMeasurement proj = qubit_projectors({v[0], v[1]});
    const std::array<double, 3> b1{v[3], v[4], v[5]};
    const std::array<double, 3> b2{v[6], v[7], v[8]};
    ComplexMatrix chi = kron(proj.projectors[0], bloch_qubit(b1)) * cplx{p, 0.0};
    chi += kron(proj.projectors[1], bloch_qubit(b2)) * cplx{1.0 - p, 0.0};
    return chi;
}

double hs_distance2(const ComplexMatrix& a, const ComplexMatrix& b) {
    double d = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) d += std::norm(a(r, c) - b(r, c));
    return d;
}

}  // namespace

double nearest_classical_check(const DensityMatrix& rho, int samples, std::uint64_t seed) {
    if (rho.qubits() != 2) throw std::invalid_argument("nearest_classical_check: two-qubit states only");
    if (samples < 1) throw std::invalid_argument("nearest_classical_check: samples must be positive");

    auto objective = [&](const std::vector<double>& v) { return hs_distance2(rho.mat(), classical_family(v)); };

    std::vector<std::vector<double>> starts;

    // Deterministic start: measure rho along the eta_max direction; for the
    // optimal basis the measured state is the nearest classical state.
    {
        const BlochForm b = bloch_decompose(rho);
        ComplexMatrix m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double v = b.x[i] * b.x[j];
                for (int k = 0; k < 3; ++k) v += b.T[i][k] * b.T[j][k];
                m(i, j) = v;
            }
        const auto eig = hermitian_eig(m);
        const int top = 2;  // ascending order; last column is eta_max
        std::array<double, 3> n{};
        for (int i = 0; i < 3; ++i) n[i] = eig.eigenvectors(i, top).real();
        const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        for (double& c : n) c /= len;
        const double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
        const double phi = std::atan2(n[1], n[0]);

        const ProjectiveMeasurement local = qubit_projectors({theta, phi});
        const ProjectiveMeasurement lifted = lift_to_register(local, 2, 0);
        std::vector<double> start{theta, phi, 0.5, 0, 0, 0, 0, 0, 0};
        for (int i = 0; i < 2; ++i) {
            const ComplexMatrix collapsed = lifted.projectors[i] * rho.mat() * lifted.projectors[i];
            const double prob = collapsed.trace().real();
            if (i == 0) start[2] = prob;
            if (prob > 1e-12) {
                ComplexMatrix reduced = partial_trace(collapsed, 2, 2, 1);
                reduced *= cplx{1.0 / prob, 0.0};
                for (int k = 1; k <= 3; ++k)
                    start[3 + 3 * i + (k - 1)] = (reduced * sigma(k)).trace().real();
            }
        }
        starts.push_back(std::move(start));
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    while (static_cast<int>(starts.size()) < samples) {
        std::vector<double> s(9);
        s[0] = std::acos(1.0 - 2.0 * uni(rng));
        s[1] = 2.0 * M_PI * uni(rng);
        s[2] = uni(rng);
        for (int k = 3; k < 9; ++k) s[k] = 2.0 * uni(rng) - 1.0;
        starts.push_back(std::move(s));
    }

    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : starts) {
        const auto r = nelder_mead_min(objective, s, 0.1, 1e-9, 4000);
        best = std::min(best, r.value);
    }
    return best;
}

std::vector<PuritySweepRow> discord_vs_purity_sweep(const std::vector<double>& eps_grid, Exec exec) {
    if (eps_grid.empty()) throw std::invalid_argument("discord_vs_purity_sweep: empty grid");
    std::vector<PuritySweepRow> rows(eps_grid.size());
    for_each_index(rows.size(), exec, [&](std::size_t i) {
        const double eps = eps_grid[i];
        PuritySweepRow& row = rows[i];
        row.eps = eps;
        row.d_w = werner_discord(eps);
        row.d_g = geometric_discord(werner(eps));
        row.gap = std::abs(row.d_w - 2.0 * row.d_g);
    });
    return rows;
}

}  // namespace qcorr
