#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/exec.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportKind {
    cabello_beta,
    chsh,
    kn_sweep,
    elgi_sweep,
    discord_point,
    discord_sweep,
    geometric_discord,
};

std::string kind_name(ReportKind kind);

struct ReportMetadata {
    std::string version = kToolVersion;
    std::string seed;
    // ISO-8601 UTC; left empty for seeded runs so repeated invocations are
    // bit-identical.
    std::string timestamp;
};

// Named scalar results with sweep metadata, ready for CSV/JSON emission.
struct CorrelationReport {
    ReportKind kind = ReportKind::cabello_beta;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    ReportMetadata metadata;

    void add_param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
};

// Values at 12 significant digits; kind, params and metadata as '#' comments.
void write_csv(std::ostream& os, const CorrelationReport& report);
void write_json(std::ostream& os, const CorrelationReport& report);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Reads back the CSV format emitted by write_csv (comments skipped).
CsvTable parse_csv(std::istream& is);

// Plain-text state format: first line "dim d", then d^2 lines "re im" in
// row-major order. Validates the DensityMatrix invariants and reports the
// failing check with its magnitude.
DensityMatrix read_state_file(const std::string& path);
void write_state_file(const std::string& path, const DensityMatrix& rho);

// Emits kstring.csv, discord_purity.csv, elgi.csv, lgi_decay.csv into
// out_dir; returns the file paths.
std::vector<std::string> figures_all(const std::string& out_dir, Exec exec = Exec::Parallel);

}  // namespace qcorr
