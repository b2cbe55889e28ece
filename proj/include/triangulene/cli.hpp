#pragma once

#include <optional>
#include <string>

namespace triangulene {

/// CLI exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

enum class Command { Lattice, Spectrum, States, Edges, Verify, Tessellate, Chain };
enum class OutputFormat { Json, Csv, Svg };

struct RunConfig {
    Command command = Command::Spectrum;
    int N = 0;
    std::optional<int> q;
    std::optional<int> p;
    std::optional<std::string> band;   // "+", "-"
    std::optional<int> branch;         // 1, 2
    std::optional<int> l;
    std::optional<int> qrep;           // -1, 0, 1
    int supercell = 3;
    std::optional<double> tol;         // spectral tolerance for verify
    std::string out;                   // file or prefix; empty = stdout/cwd
    OutputFormat format = OutputFormat::Json;
    bool format_set = false;
};

/// Executes one command, writing the requested files (or stdout for
/// single-file commands with no --out). Returns a process exit code;
/// never throws.
int run(const RunConfig& config);

} // namespace triangulene
