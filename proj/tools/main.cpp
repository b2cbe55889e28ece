#include <cstdlib>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "triangulene/cli.hpp"

using triangulene::Command;
using triangulene::OutputFormat;
using triangulene::RunConfig;

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra and eigenstates of zig-zag triangular graphene billiards"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    std::string band;
    int q = 0, p = 0, branch = 0, l = 0, qrep = 2;
    double tol = 0.0;

    const std::map<std::string, Command> commands = {
        {"lattice", Command::Lattice},       {"spectrum", Command::Spectrum},
        {"states", Command::States},         {"edges", Command::Edges},
        {"verify", Command::Verify},         {"tessellate", Command::Tessellate},
        {"chain", Command::Chain}};

    const std::map<std::string, std::string> descriptions = {
        {"lattice", "Export the lattice geometry, bonds and symmetry data"},
        {"spectrum", "Exact level list with multiplicities and labels"},
        {"states", "Periodic eigenstate amplitudes for one (q, p)"},
        {"edges", "The N-1 orthonormal zero-energy edge states"},
        {"verify", "Full analytic-vs-oracle check; nonzero exit on failure"},
        {"tessellate", "Extend a state over a supercell patch of the sheet"},
        {"chain", "Closed-form spectrum of the open --n site chain"}};

    for (const auto& [name, cmd] : commands) {
        auto* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--n", cfg.N, name == "chain" ? "chain length M" : "billiard size N")
            ->required();
        sub->add_option("--out", cfg.out, "output file (or prefix for multi-file commands)");
        auto* fmt = sub->add_option("--format", format, "json, csv or svg");
        sub->parse_complete_callback([&cfg, cmd, fmt] {
            cfg.command = cmd;
            cfg.format_set = fmt->count() > 0;
        });
        if (name == "states" || name == "tessellate") {
            sub->add_option("--q", q, "first quantum number")->required();
            sub->add_option("--p", p, "second quantum number")->required();
            sub->add_option("--band", band, "band sign: + or -");
            sub->add_option("--branch", branch, "branch: 1 or 2");
        }
        if (name == "edges") {
            sub->add_option("--l", l, "emit only layer l states");
            sub->add_option("--qrep", qrep, "emit only symmetry class q (-1, 0, 1)");
        }
        if (name == "tessellate")
            sub->add_option("--supercell", cfg.supercell, "patch size in billiard periods");
        if (name == "verify") sub->add_option("--tol", tol, "spectral comparison tolerance");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : triangulene::kExitUsage;
    }

    if (q || p) {
        cfg.q = q;
        cfg.p = p;
    }
    if (!band.empty()) cfg.band = band;
    if (branch) cfg.branch = branch;
    if (l) cfg.l = l;
    if (qrep != 2) cfg.qrep = qrep;
    if (tol > 0.0) cfg.tol = tol;
    if (!cfg.tol) {
        if (const char* env = std::getenv("TRIANGULENE_TOL")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && v > 0.0) cfg.tol = v;
        }
    }
    if (format == "csv")
        cfg.format = OutputFormat::Csv;
    else if (format == "svg")
        cfg.format = OutputFormat::Svg;
    else if (format == "json")
        cfg.format = OutputFormat::Json;
    else {
        std::fprintf(stderr, "usage error: unknown format '%s'\n", format.c_str());
        return triangulene::kExitUsage;
    }

    return triangulene::run(cfg);
}
