#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/circuit.hpp"
#include "qcorr/contextuality.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/leggett_garg.hpp"
#include "qcorr/report.hpp"

namespace {

using namespace qcorr;

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct RunContext {
    std::string format = "csv";
    bool serial = false;
    std::uint64_t seed = 0;
    bool seeded = false;

    Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }

    ReportMetadata metadata() const {
        ReportMetadata m;
        m.seed = std::to_string(seed);
        if (!seeded) m.timestamp = iso8601_now();
        return m;
    }

    void emit(const CorrelationReport& report) const {
        if (format == "json")
            write_json(std::cout, report);
        else
            write_csv(std::cout, report);
    }
};

void add_common_params(CorrelationReport& rep, const RunContext& ctx) {
    if (ctx.serial) rep.add_param("serial", "true");
}

CorrelationReport run_mermin(const RunContext& ctx, const std::string& state_file, double visibility) {
    const DensityMatrix rho = state_file.empty() ? maximally_mixed(2) : read_state_file(state_file);
    const MerminSquare sq = mermin_square();
    CorrelationReport rep;
    rep.kind = ReportKind::cabello_beta;
    rep.metadata = ctx.metadata();
    rep.add_param("state", state_file.empty() ? "maximally-mixed" : state_file);
    rep.add_param("visibility", fmt(visibility));
    add_common_params(rep, ctx);
    rep.columns = {"r1", "r2", "r3", "c1", "c2", "c3", "beta"};
    std::vector<double> row;
    double beta = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double e = visibility * moussa_row_expectation(rho, sq.row(i));
        row.push_back(e);
        beta += e;
    }
    for (int j = 0; j < 3; ++j) {
        const double e = visibility * moussa_row_expectation(rho, sq.column(j));
        row.push_back(e);
        beta += (j == 2 ? -e : e);
    }
    row.push_back(beta);
    rep.rows.push_back(std::move(row));
    return rep;
}

CorrelationReport run_assignments(const RunContext& ctx) {
    const AssignmentSearchResult res = noncontextual_assignment_search();
    CorrelationReport rep;
    rep.kind = ReportKind::cabello_beta;
    rep.metadata = ctx.metadata();
    rep.add_param("search", "mermin-square-assignments");
    rep.add_param("satisfying", std::to_string(res.satisfying) + " / " +
                                    std::to_string(res.total_assignments));
    add_common_params(rep, ctx);
    rep.columns = {"total", "satisfying", "max_satisfiable"};
    rep.rows.push_back({static_cast<double>(res.total_assignments),
                        static_cast<double>(res.satisfying),
                        static_cast<double>(res.max_satisfiable_constraints)});
    return rep;
}

CorrelationReport run_chsh(const RunContext& ctx, int grid, const std::vector<std::string>& files) {
    std::vector<DensityMatrix> states;
    if (files.empty()) {
        states = pseudo_spin_bell_states();
    } else {
        for (const auto& f : files) states.push_back(read_state_file(f));
    }
    const ChshScanResult best = qho_chsh_scan(states, grid, ctx.exec());
    CorrelationReport rep;
    rep.kind = ReportKind::chsh;
    rep.metadata = ctx.metadata();
    rep.add_param("grid", std::to_string(grid));
    rep.add_param("states", files.empty() ? "pseudo-spin-bell" : std::to_string(files.size()) + " files");
    add_common_params(rep, ctx);
    rep.columns = {"state_index", "beta", "eta", "I"};
    rep.rows.push_back({static_cast<double>(best.state_index), best.beta, best.eta, best.value});
    return rep;
}

CorrelationReport run_lgi_point(const RunContext& ctx, int n, double phase) {
    CorrelationReport rep;
    rep.kind = ReportKind::kn_sweep;
    rep.metadata = ctx.metadata();
    rep.add_param("n", std::to_string(n));
    rep.add_param("phase", fmt(phase));
    add_common_params(rep, ctx);
    const LgConfig config{n, 1.0, phase};
    const double kn = kn_analytic(config);
    const LgBounds b = lg_bounds(n);
    rep.columns = {"n", "omega_dt", "K_n", "lower", "upper", "margin"};
    rep.rows.push_back({static_cast<double>(n), phase, kn, b.lower, b.upper,
                        std::max(kn - b.upper, b.lower - kn)});
    return rep;
}

CorrelationReport run_lgi_sweep(const RunContext& ctx, int n_min, int n_max, int points,
                                std::optional<double> t2) {
    CorrelationReport rep;
    rep.kind = ReportKind::kn_sweep;
    rep.metadata = ctx.metadata();
    rep.add_param("n-min", std::to_string(n_min));
    rep.add_param("n-max", std::to_string(n_max));
    rep.add_param("points", std::to_string(points));
    if (t2) rep.add_param("t2", fmt(*t2));
    add_common_params(rep, ctx);
    rep.columns = {"n", "omega_dt", "K_n", "lower", "upper", "margin"};
    if (!t2) {
        for (const auto& row : violation_map(n_min, n_max, points, ctx.exec()))
            rep.rows.push_back({static_cast<double>(row.n), row.phase, row.kn, row.lower, row.upper,
                                row.margin});
        return rep;
    }
    // With decay the correlators come from the dephased Moussa circuit at
    // omega = 1, so the phase doubles as the physical step length.
    const int n_count = n_max - n_min + 1;
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(n_count) * points);
    const double step = 2.0 * M_PI / points;
    const DensityMatrix mixed = maximally_mixed(1);
    for_each_index(rows.size(), ctx.exec(), [&](std::size_t idx) {
        const int n = n_min + static_cast<int>(idx) / points;
        const double phase = (static_cast<int>(idx) % points) * step;
        const LgBounds b = lg_bounds(n);
        double kn;
        if (phase == 0.0) {
            kn = n - 2;  // zero-length steps: all correlators are exactly 1
        } else {
            kn = kn_circuit({n, 1.0, phase}, mixed, *t2);
        }
        rows[idx] = {static_cast<double>(n), phase, kn, b.lower, b.upper,
                     std::max(kn - b.upper, b.lower - kn)};
    });
    rep.rows = std::move(rows);
    return rep;
}

CorrelationReport run_elgi_sweep(const RunContext& ctx, int n, int points) {
    CorrelationReport rep;
    rep.kind = ReportKind::elgi_sweep;
    rep.metadata = ctx.metadata();
    rep.add_param("n", std::to_string(n));
    rep.add_param("points", std::to_string(points));
    add_common_params(rep, ctx);
    rep.columns = {"n", "theta", "deficit"};
    for (const auto& row : elgi_sweep(n, points, ctx.exec()))
        rep.rows.push_back({static_cast<double>(row.n), row.theta, row.deficit});
    return rep;
}

CorrelationReport run_discord_werner(const RunContext& ctx, std::optional<double> eps,
                                     std::optional<int> sweep_points) {
    CorrelationReport rep;
    rep.metadata = ctx.metadata();
    add_common_params(rep, ctx);
    if (eps) {
        rep.kind = ReportKind::discord_point;
        rep.add_param("eps", fmt(*eps));
        rep.columns = {"eps", "D_W", "D_G_W"};
        rep.rows.push_back({*eps, werner_discord(*eps), geometric_discord(werner(*eps))});
    } else {
        const int points = *sweep_points;
        if (points < 2) throw std::invalid_argument("discord werner: sweep needs at least 2 points");
        rep.kind = ReportKind::discord_sweep;
        rep.add_param("sweep", std::to_string(points));
        rep.columns = {"eps", "D_W", "D_G_W", "gap"};
        std::vector<double> grid(points);
        for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
        for (const auto& row : discord_vs_purity_sweep(grid, ctx.exec()))
            rep.rows.push_back({row.eps, row.d_w, row.d_g, row.gap});
    }
    return rep;
}

CorrelationReport run_discord_state(const RunContext& ctx, const std::string& file,
                                    const std::string& side) {
    const DensityMatrix rho = read_state_file(file);
    SearchParams params;
    params.exec = ctx.exec();
    const DiscordResult res = discord(rho, side == "B" ? Side::B : Side::A, params);
    CorrelationReport rep;
    rep.kind = ReportKind::discord_point;
    rep.metadata = ctx.metadata();
    rep.add_param("in", file);
    rep.add_param("side", side);
    add_common_params(rep, ctx);
    rep.columns = {"mutual_info", "classical_corr", "discord", "theta", "phi"};
    rep.rows.push_back({res.mutual_info, res.classical_corr, res.discord, res.argmax.theta,
                        res.argmax.phi});
    return rep;
}

CorrelationReport run_discord_geometric(const RunContext& ctx, const std::string& file, int samples) {
    const DensityMatrix rho = read_state_file(file);
    CorrelationReport rep;
    rep.kind = ReportKind::geometric_discord;
    rep.metadata = ctx.metadata();
    rep.add_param("in", file);
    rep.add_param("samples", std::to_string(samples));
    add_common_params(rep, ctx);
    rep.columns = {"D_G", "nearest_classical"};
    rep.rows.push_back({geometric_discord(rho), nearest_classical_check(rho, samples, ctx.seed)});
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Density-matrix toolkit for contextuality, Leggett-Garg and discord studies"};
    app.require_subcommand(1);

    RunContext ctx;
    std::string seed_str;
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed_str, "RNG seed (overrides QCORR_SEED)");
    app.add_flag("--serial", ctx.serial, "Run sweep kernels on a single thread");

    // contextuality
    auto* ctx_cmd = app.add_subcommand("contextuality", "Mermin square and pseudo-spin CHSH");
    ctx_cmd->require_subcommand(1);
    auto* mermin = ctx_cmd->add_subcommand("mermin", "Cabello line expectations and beta");
    std::string mermin_state;
    double visibility = 1.0;
    mermin->add_option("--state", mermin_state, "State file (default: maximally mixed)");
    mermin->add_option("--visibility", visibility, "Uniform line visibility")
        ->check(CLI::Range(0.0, 1.0));
    auto* assignments = ctx_cmd->add_subcommand("assignments", "Exhaustive +-1 assignment search");
    auto* chsh = ctx_cmd->add_subcommand("chsh", "Scan I over (beta, eta)");
    int chsh_grid = 360;
    std::vector<std::string> chsh_states;
    chsh->add_option("--grid", chsh_grid, "Angle grid resolution")->check(CLI::PositiveNumber);
    chsh->add_option("--state", chsh_states, "State file(s) (default: pseudo-spin Bell states)");

    // lgi
    auto* lgi = app.add_subcommand("lgi", "Leggett-Garg strings");
    lgi->require_subcommand(1);
    auto* lgi_sweep_cmd = lgi->add_subcommand("sweep", "K_n over a phase grid");
    int n_min = 3, n_max = 8, lgi_points = 512;
    double t2_value = 0.0;
    bool has_t2 = false;
    lgi_sweep_cmd->add_option("--n-min", n_min)->check(CLI::Range(3, 64));
    lgi_sweep_cmd->add_option("--n-max", n_max)->check(CLI::Range(3, 64));
    lgi_sweep_cmd->add_option("--points", lgi_points)->check(CLI::PositiveNumber);
    auto* t2_opt = lgi_sweep_cmd->add_option("--t2", t2_value, "Dephasing time constant")
                       ->check(CLI::PositiveNumber);
    auto* lgi_point_cmd = lgi->add_subcommand("point", "K_n at a single phase");
    int point_n = 3;
    double point_phase = 0.0;
    lgi_point_cmd->add_option("--n", point_n)->required()->check(CLI::Range(3, 64));
    lgi_point_cmd->add_option("--phase", point_phase, "omega dt")->required();

    // elgi
    auto* elgi = app.add_subcommand("elgi", "Entropic Leggett-Garg");
    elgi->require_subcommand(1);
    auto* elgi_sweep_cmd = elgi->add_subcommand("sweep", "Information deficit over theta");
    int elgi_n = 3, elgi_points = 181;
    elgi_sweep_cmd->add_option("--n", elgi_n)->check(CLI::Range(3, 64));
    elgi_sweep_cmd->add_option("--points", elgi_points)->check(CLI::Range(2, 100000));

    // discord
    auto* disc = app.add_subcommand("discord", "Discord and geometric discord");
    disc->require_subcommand(1);
    auto* disc_werner = disc->add_subcommand("werner", "Closed-form Werner discord");
    double werner_eps = 0.0;
    int werner_sweep = 0;
    auto* eps_opt = disc_werner->add_option("--eps", werner_eps)->check(CLI::Range(0.0, 1.0));
    auto* sweep_opt = disc_werner->add_option("--sweep", werner_sweep, "Grid points over [0, 1]")
                          ->check(CLI::PositiveNumber);
    eps_opt->excludes(sweep_opt);
    sweep_opt->excludes(eps_opt);
    auto* disc_state = disc->add_subcommand("state", "Numeric discord of a state file");
    std::string disc_file, disc_side = "A";
    disc_state->add_option("--in", disc_file)->required();
    disc_state->add_option("--side", disc_side, "Measured side")->check(CLI::IsMember({"A", "B"}));
    auto* disc_geom = disc->add_subcommand("geometric", "Geometric discord of a state file");
    std::string geom_file;
    int geom_samples = 32;
    disc_geom->add_option("--in", geom_file)->required();
    disc_geom->add_option("--samples", geom_samples, "Multi-start count")->check(CLI::PositiveNumber);

    // figures
    auto* figures = app.add_subcommand("figures", "Figure-reproduction CSV files");
    figures->require_subcommand(1);
    auto* figures_all_cmd = figures->add_subcommand("all", "Emit every figure CSV");
    std::string out_dir;
    figures_all_cmd->add_option("--out", out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    has_t2 = t2_opt->count() > 0;

    if (seed_str.empty()) {
        if (const char* env = std::getenv("QCORR_SEED")) seed_str = env;
    }
    ctx.seeded = !seed_str.empty();
    if (ctx.seeded) {
        try {
            ctx.seed = std::stoull(seed_str);
        } catch (const std::exception&) {
            std::cerr << "error: seed '" << seed_str << "' is not an unsigned integer\n";
            return 2;
        }
    } else {
        ctx.seed = std::random_device{}();
    }

    try {
        if (mermin->parsed()) {
            ctx.emit(run_mermin(ctx, mermin_state, visibility));
        } else if (assignments->parsed()) {
            ctx.emit(run_assignments(ctx));
        } else if (chsh->parsed()) {
            ctx.emit(run_chsh(ctx, chsh_grid, chsh_states));
        } else if (lgi_sweep_cmd->parsed()) {
            ctx.emit(run_lgi_sweep(ctx, n_min, n_max, lgi_points,
                                   has_t2 ? std::optional<double>(t2_value) : std::nullopt));
        } else if (lgi_point_cmd->parsed()) {
            ctx.emit(run_lgi_point(ctx, point_n, point_phase));
        } else if (elgi_sweep_cmd->parsed()) {
            ctx.emit(run_elgi_sweep(ctx, elgi_n, elgi_points));
        } else if (disc_werner->parsed()) {
            if (eps_opt->count() == 0 && sweep_opt->count() == 0) {
                std::cerr << "error: discord werner needs --eps or --sweep\n";
                return 2;
            }
            ctx.emit(run_discord_werner(ctx,
                                        eps_opt->count() ? std::optional<double>(werner_eps)
                                                         : std::nullopt,
                                        sweep_opt->count() ? std::optional<int>(werner_sweep)
                                                           : std::nullopt));
        } else if (disc_state->parsed()) {
            ctx.emit(run_discord_state(ctx, disc_file, disc_side));
        } else if (disc_geom->parsed()) {
            ctx.emit(run_discord_geometric(ctx, geom_file, geom_samples));
        } else if (figures_all_cmd->parsed()) {
            for (const auto& path : figures_all(out_dir, ctx.exec()))
                std::cout << "# wrote " << path << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
