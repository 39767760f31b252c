#include "qcorr/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qcorr/discord.hpp"
#include "qcorr/leggett_garg.hpp"

namespace qcorr {

std::string kind_name(ReportKind kind) {
    switch (kind) {
        case ReportKind::cabello_beta: return "cabello_beta";
        case ReportKind::chsh: return "chsh";
        case ReportKind::kn_sweep: return "kn_sweep";
        case ReportKind::elgi_sweep: return "elgi_sweep";
        case ReportKind::discord_point: return "discord_point";
        case ReportKind::discord_sweep: return "discord_sweep";
        case ReportKind::geometric_discord: return "geometric_discord";
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& os, const CorrelationReport& report) {
    os << "# kind: " << kind_name(report.kind) << '\n';
    os << "# version: " << report.metadata.version << '\n';
    if (!report.metadata.seed.empty()) os << "# seed: " << report.metadata.seed << '\n';
    if (!report.metadata.timestamp.empty()) os << "# timestamp: " << report.metadata.timestamp << '\n';
    for (const auto& [k, v] : report.params) os << "# " << k << ": " << v << '\n';
    for (std::size_t c = 0; c < report.columns.size(); ++c)
        os << (c ? "," : "") << report.columns[c];
    os << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_value(row[c]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const CorrelationReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(report.kind);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size() && c < report.columns.size(); ++c)
            obj[report.columns[c]] = row[c];
        rows.push_back(std::move(obj));
    }
    j["rows"] = rows;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    meta["version"] = report.metadata.version;
    if (!report.metadata.seed.empty()) meta["seed"] = report.metadata.seed;
    if (!report.metadata.timestamp.empty()) meta["timestamp"] = report.metadata.timestamp;
    j["metadata"] = meta;
    os << j.dump(2) << '\n';
}

CsvTable parse_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!have_header) {
            table.columns = cells;
            have_header = true;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(std::stod(c));
        table.rows.push_back(std::move(row));
    }
    return table;
}

DensityMatrix read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file '" + path + "'");
    std::string tag;
    int d = 0;
    if (!(in >> tag >> d) || tag != "dim")
        throw std::runtime_error("state file '" + path + "': expected leading 'dim d' line");
    if (d < 2 || d > 16 || (d & (d - 1)) != 0)
        throw std::runtime_error("state file '" + path + "': dim " + std::to_string(d) +
                                 " is not a power of two in [2, 16]");
    ComplexMatrix m(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            double re, im;
            if (!(in >> re >> im))
                throw std::runtime_error("state file '" + path + "': expected " + std::to_string(d * d) +
                                         " 're im' entries");
            m(r, c) = cplx{re, im};
        }
    int qubits = 0;
    while ((1 << qubits) < d) ++qubits;

    // Re-run the invariant checks here so failures name the check and its
    // magnitude for the file at hand.
    const double herm = m.hermiticity_defect();
    if (herm > 1e-10)
        throw std::runtime_error("state file '" + path + "': hermiticity defect " + format_value(herm));
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > 1e-9)
        throw std::runtime_error("state file '" + path + "': trace " + format_value(tr) + " is not 1");
    const auto eig = hermitian_eig(m);
    if (eig.eigenvalues.front() < -1e-9)
        throw std::runtime_error("state file '" + path + "': negative eigenvalue " +
                                 format_value(eig.eigenvalues.front()));
    return DensityMatrix(qubits, m);
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file '" + path + "'");
    out << "dim " << rho.dim() << '\n';
    out.precision(17);
    for (int r = 0; r < rho.dim(); ++r)
        for (int c = 0; c < rho.dim(); ++c)
            out << rho.mat()(r, c).real() << ' ' << rho.mat()(r, c).imag() << '\n';
}

namespace {

void write_file(const std::string& path, const CorrelationReport& report) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_csv(out, report);
}

}  // namespace

std::vector<std::string> figures_all(const std::string& out_dir, Exec exec) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<std::string> written;

    {
        CorrelationReport rep;
        rep.kind = ReportKind::kn_sweep;
        rep.add_param("n-min", "3");
        rep.add_param("n-max", "8");
        rep.add_param("points", "512");
        rep.columns = {"n", "phase", "K_n", "lower", "upper"};
        for (const auto& row : violation_map(3, 8, 512, exec))
            rep.rows.push_back({static_cast<double>(row.n), row.phase, row.kn, row.lower, row.upper});
        const std::string path = (fs::path(out_dir) / "kstring.csv").string();
        write_file(path, rep);
        written.push_back(path);
    }
    {
        CorrelationReport rep;
        rep.kind = ReportKind::discord_sweep;
        rep.add_param("points", "101");
        rep.columns = {"eps", "D_W", "D_G_W", "gap"};
        std::vector<double> grid(101);
        for (int i = 0; i <= 100; ++i) grid[i] = i / 100.0;
        for (const auto& row : discord_vs_purity_sweep(grid, exec))
            rep.rows.push_back({row.eps, row.d_w, row.d_g, row.gap});
        const std::string path = (fs::path(out_dir) / "discord_purity.csv").string();
        write_file(path, rep);
        written.push_back(path);
    }
    {
        CorrelationReport rep;
        rep.kind = ReportKind::elgi_sweep;
        rep.add_param("n", "3");
        rep.add_param("points", "181");
        rep.columns = {"theta", "D_3"};
        for (const auto& row : elgi_sweep(3, 181, exec)) rep.rows.push_back({row.theta, row.deficit});
        const std::string path = (fs::path(out_dir) / "elgi.csv").string();
        write_file(path, rep);
        written.push_back(path);
    }
    {
        // K_3 from the dephased Moussa circuit at the maximally violating
        // phase per step, as a function of the step length.
        CorrelationReport rep;
        rep.kind = ReportKind::kn_sweep;
        const double omega = 2.0 * M_PI;
        const double t2 = 1.0;
        rep.add_param("n", "3");
        rep.add_param("omega", format_value(omega));
        rep.add_param("t2", format_value(t2));
        rep.columns = {"t", "K_3", "lower", "upper"};
        const int points = 256;
        std::vector<std::vector<double>> rows(points);
        for_each_index(points, exec, [&](std::size_t i) {
            const double t = (i + 1) * (4.0 * t2 / points);
            LgConfig config{3, omega, t};
            const double kn = kn_circuit(config, maximally_mixed(1), t2);
            rows[i] = {t, kn, lg_bounds(3).lower, lg_bounds(3).upper};
        });
        rep.rows = std::move(rows);
        const std::string path = (fs::path(out_dir) / "lgi_decay.csv").string();
        write_file(path, rep);
        written.push_back(path);
    }
    return written;
}

}  // namespace qcorr
