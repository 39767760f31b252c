#include "qcorr/leggett_garg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qcorr/circuit.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/optimize.hpp"

namespace qcorr {

void validate(const LgConfig& config) {
    if (config.n < 3 || config.n > 64)
        throw std::invalid_argument("LgConfig: n must be in [3, 64], got " + std::to_string(config.n));
    if (config.dt <= 0.0) throw std::invalid_argument("LgConfig: dt must be positive");
}

LgBounds lg_bounds(int n) {
    if (n < 3) throw std::invalid_argument("lg_bounds: n must be at least 3");
    LgBounds b;
    b.upper = n - 2;
    b.lower = (n % 2 == 1) ? -n : -(n - 2);
    return b;
}

double ttcc_analytic(double omega, double dt) { return std::cos(omega * dt); }

double kn_analytic(const LgConfig& config) {
    validate(config);
    const double phase = config.omega * config.dt;
    return (config.n - 1) * std::cos(phase) - std::cos((config.n - 1) * phase);
}

double kn_circuit(const LgConfig& config, const DensityMatrix& rho_s, std::optional<double> t2) {
    validate(config);
    auto ttcc = [&](double ti, double tj) {
        return t2 ? dephase_ttcc(config.omega, ti, tj, *t2)
                  : moussa_ttcc(config.omega, ti, tj, rho_s);
    };
    double kn = 0.0;
    for (int k = 0; k < config.n - 1; ++k) kn += ttcc(k * config.dt, (k + 1) * config.dt);
    kn -= ttcc(0.0, (config.n - 1) * config.dt);
    return kn;
}

double kn_max(int n, int resolution) {
    if (resolution < 2) throw std::invalid_argument("kn_max: resolution must be >= 2");
    const double step = 2.0 * M_PI / resolution;
    auto value = [&](double phase) {
        return (n - 1) * std::cos(phase) - std::cos((n - 1) * phase);
    };
    int best = 0;
    double best_value = value(0.0);
    for (int i = 1; i < resolution; ++i) {
        const double v = value(i * step);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    const double center = best * step;
    auto [phase, v] = golden_section_max(value, center - step, center + step);
    return v;
}

std::vector<ViolationRow> violation_map(int n_min, int n_max, int resolution, Exec exec) {
    if (n_min < 3 || n_max < n_min) throw std::invalid_argument("violation_map: bad n range");
    if (resolution < 2) throw std::invalid_argument("violation_map: resolution must be >= 2");
    const int n_count = n_max - n_min + 1;
    const double step = 2.0 * M_PI / resolution;
    std::vector<ViolationRow> rows(static_cast<std::size_t>(n_count) * resolution);
    for_each_index(rows.size(), exec, [&](std::size_t idx) {
        const int n = n_min + static_cast<int>(idx) / resolution;
        const int i = static_cast<int>(idx) % resolution;
        const double phase = i * step;
        ViolationRow& row = rows[idx];
        row.n = n;
        row.phase = phase;
        row.kn = (n - 1) * std::cos(phase) - std::cos((n - 1) * phase);
        const LgBounds b = lg_bounds(n);
        row.lower = b.lower;
        row.upper = b.upper;
        row.margin = std::max(row.kn - b.upper, b.lower - row.kn);
        row.violating = row.margin > 0.0;
    });
    return rows;
}

double conditional_entropy(const std::array<double, 4>& joint, const std::array<double, 2>& marginal) {
    for (int a = 0; a < 2; ++a) {
        const double sum = joint[2 * a] + joint[2 * a + 1];
        if (std::abs(sum - marginal[a]) > 1e-9)
            throw std::invalid_argument("conditional_entropy: marginal " + std::to_string(marginal[a]) +
                                        " inconsistent with joint row sum " + std::to_string(sum));
    }
    const double hj = shannon_entropy({joint[0], joint[1], joint[2], joint[3]});
    const double hm = shannon_entropy({marginal[0], marginal[1]});
    return hj - hm;
}

double elgi_deficit(const LgConfig& config, double spin) {
    validate(config);
    if (std::abs(spin - 0.5) > 1e-12)
        throw std::invalid_argument("elgi_deficit: only spin 1/2 is supported");
    const ElgiProbabilities probs = elgi_probabilities(config.omega, config.n, config.dt);
    const double h_step = conditional_entropy(probs.joint_for(0, 1), probs.single[0]);
    const double h_total = conditional_entropy(probs.joint_for(0, config.n - 1), probs.single[0]);
    return ((config.n - 1) * h_step - h_total) / std::log2(2.0 * spin + 1.0);
}

std::vector<ElgiSweepRow> elgi_sweep(int n, int points, Exec exec) {
    if (points < 2) throw std::invalid_argument("elgi_sweep: need at least 2 points");
    std::vector<ElgiSweepRow> rows(points);
    const double step = M_PI / (points - 1);
    for_each_index(rows.size(), exec, [&](std::size_t i) {
        const double theta = i * step;
        rows[i].n = n;
        rows[i].theta = theta;
        rows[i].deficit = theta == 0.0 ? 0.0 : elgi_deficit({n, 1.0, theta / (n - 1)});
    });
    return rows;
}

double markov_deficit(int n, double flip_prob) {
    if (n < 3) throw std::invalid_argument("markov_deficit: n must be at least 3");
    if (flip_prob < 0.0 || flip_prob > 1.0)
        throw std::invalid_argument("markov_deficit: flip probability must be in [0, 1]");
    auto h = [&](int steps) {
        const double stay = (1.0 + std::pow(1.0 - 2.0 * flip_prob, steps)) / 2.0;
        return binary_entropy(stay);
    };
    return (n - 1) * h(1) - h(n - 1);
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t block) {
    // splitmix64 step on seed + block, for independent per-block streams
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (block + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

double macrorealist_kn(int n, const std::vector<double>& flip_probs, int trials, std::uint64_t seed,
                       Exec exec) {
    if (n < 3) throw std::invalid_argument("macrorealist_kn: n must be at least 3");
    if (static_cast<int>(flip_probs.size()) != n - 1)
        throw std::invalid_argument("macrorealist_kn: need n-1 flip probabilities");
    if (trials < 1) throw std::invalid_argument("macrorealist_kn: trials must be positive");

    constexpr int kBlock = 1024;
    const std::size_t blocks = (static_cast<std::size_t>(trials) + kBlock - 1) / kBlock;
    // sums[block] = (sum of adjacent-pair products ..., sum of endpoint products)
    std::vector<std::vector<double>> sums(blocks, std::vector<double>(n, 0.0));

    for_each_index(blocks, exec, [&](std::size_t b) {
        std::mt19937_64 rng(mix_seed(seed, b));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        const int count = static_cast<int>(std::min<std::size_t>(kBlock, trials - b * kBlock));
        std::vector<double>& acc = sums[b];
        std::vector<int> q(n);
        for (int t = 0; t < count; ++t) {
            q[0] = uni(rng) < 0.5 ? +1 : -1;
            for (int k = 1; k < n; ++k) q[k] = uni(rng) < flip_probs[k - 1] ? -q[k - 1] : q[k - 1];
            for (int k = 0; k < n - 1; ++k) acc[k] += q[k] * q[k + 1];
            acc[n - 1] += q[0] * q[n - 1];
        }
    });

    double kn = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
        for (int k = 0; k < n - 1; ++k) kn += sums[b][k];
        kn -= sums[b][n - 1];
    }
    return kn / trials;
}

}  // namespace qcorr
