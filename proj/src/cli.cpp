#include "triangulene/cli.hpp"

#include <fstream>
#include <iostream>
#include <vector>

#include "triangulene/io.hpp"
#include "triangulene/oracle.hpp"

namespace triangulene {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void write_file(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

std::string extension(OutputFormat f) {
    switch (f) {
    case OutputFormat::Csv: return ".csv";
    case OutputFormat::Svg: return ".svg";
    default: return ".json";
    }
}

Band parse_band(const std::string& b) {
    if (b == "+" || b == "plus") return Band::Plus;
    if (b == "-" || b == "minus") return Band::Minus;
    throw UsageError("band must be + or -");
}

std::string state_payload(const StateVector& s, const TrianguleneLattice& lat, OutputFormat f) {
    switch (f) {
    case OutputFormat::Csv: return state_csv(s, lat);
    case OutputFormat::Svg: return state_svg(s, lat);
    default: return state_json(s, lat);
    }
}

int run_lattice(const RunConfig& cfg) {
    if (cfg.format_set && cfg.format != OutputFormat::Json)
        throw UsageError("lattice supports only json output");
    write_file(cfg.out, lattice_json(TrianguleneLattice(cfg.N)));
    return kExitOk;
}

int run_spectrum(const RunConfig& cfg) {
    if (cfg.format == OutputFormat::Svg) throw UsageError("spectrum supports json or csv output");
    if (cfg.format == OutputFormat::Csv)
        write_file(cfg.out, spectrum_csv(cfg.N));
    else
        write_file(cfg.out, spectrum_json(analytic_spectrum(cfg.N)));
    return kExitOk;
}

int run_states(const RunConfig& cfg) {
    if (!cfg.q || !cfg.p) throw UsageError("states requires --q and --p");
    TrianguleneLattice lat(cfg.N);

    std::vector<QuantumNumbers> wanted;
    const bool axial = *cfg.q == *cfg.p;
    for (Band band : {Band::Plus, Band::Minus}) {
        if (cfg.band && parse_band(*cfg.band) != band) continue;
        for (int branch : {1, 2}) {
            if (cfg.branch && *cfg.branch != branch) continue;
            if (branch == 1 && axial) {
                if (cfg.branch) throw UsageError("branch 1 does not exist on axial points (q = p)");
                continue;
            }
            wanted.push_back({*cfg.q, *cfg.p, band, branch});
        }
    }
    if (wanted.empty()) throw UsageError("no states selected");

    for (const auto& qn : wanted) {
        StateVector s = build_periodic_state(qn, lat);
        const std::string path = cfg.out + "state_" + label_string(s.label) + extension(cfg.format);
        write_file(path, state_payload(s, lat, cfg.format));
    }
    return kExitOk;
}

int run_edges(const RunConfig& cfg) {
    TrianguleneLattice lat(cfg.N);
    EdgeBasis basis = edge_basis(lat);
    if (cfg.l || cfg.qrep) {
        std::erase_if(basis.states, [&](const EdgeState& e) {
            return (cfg.l && e.l != *cfg.l) || (cfg.qrep && e.qrep != *cfg.qrep);
        });
        if (basis.states.empty()) throw UsageError("no edge states match --l/--qrep");
    }
    if (cfg.format == OutputFormat::Json) {
        write_file(cfg.out.empty() ? "" : cfg.out + "edges.json", edges_json(basis, lat));
        return kExitOk;
    }
    for (const auto& e : basis.states) {
        StateVector s;
        s.amplitudes = e.amplitudes;
        s.energy = 0.0;
        s.label.kind = StateLabel::Kind::Edge;
        s.label.l = e.l;
        s.label.qrep = e.qrep;
        const std::string path = cfg.out + "edge_" + label_string(s.label) + extension(cfg.format);
        write_file(path, state_payload(s, lat, cfg.format));
    }
    return kExitOk;
}

int run_verify(const RunConfig& cfg) {
    if (cfg.format_set && cfg.format != OutputFormat::Json)
        throw UsageError("verify supports only json output");
    VerifyReport rep = verify_billiard(cfg.N, cfg.tol.value_or(1e-9));
    write_file(cfg.out, verify_json(rep));
    if (!rep.pass) {
        for (const auto& f : rep.failures) std::cerr << "verify failed: " << f << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_tessellate(const RunConfig& cfg) {
    if (!cfg.q || !cfg.p) throw UsageError("tessellate requires --q and --p");
    if (cfg.format == OutputFormat::Svg) throw UsageError("tessellate supports json or csv output");
    if (cfg.supercell < 2) throw UsageError("supercell must be >= 2");
    QuantumNumbers qn{*cfg.q, *cfg.p, cfg.band ? parse_band(*cfg.band) : Band::Minus,
                      cfg.branch.value_or(2)};
    const int L = cfg.supercell * cfg.N;
    auto field = extend_state(qn, cfg.N, Window{0, L, 0, L});
    write_file(cfg.out, cfg.format == OutputFormat::Csv ? field_csv(field) : field_json(field));
    return kExitOk;
}

int run_chain(const RunConfig& cfg) {
    if (cfg.format == OutputFormat::Svg) throw UsageError("chain supports json or csv output");
    ChainSpectrum chain = chain_reference(cfg.N);
    write_file(cfg.out, cfg.format == OutputFormat::Csv ? chain_csv(chain) : chain_json(chain));
    return kExitOk;
}

} // namespace

int run(const RunConfig& cfg) {
    try {
        if (cfg.tol && *cfg.tol <= 0.0) throw UsageError("tolerance must be positive");
        // chain interprets --n as the chain length M >= 1; everything else
        // requires a billiard size N >= 2.
        if (cfg.command == Command::Chain) {
            if (cfg.N < 1) throw UsageError("chain requires --n >= 1");
        } else if (cfg.N < 2) {
            throw UsageError("--n must be >= 2");
        }
        switch (cfg.command) {
        case Command::Lattice: return run_lattice(cfg);
        case Command::Spectrum: return run_spectrum(cfg);
        case Command::States: return run_states(cfg);
        case Command::Edges: return run_edges(cfg);
        case Command::Verify: return run_verify(cfg);
        case Command::Tessellate: return run_tessellate(cfg);
        case Command::Chain: return run_chain(cfg);
        }
        return kExitInternal;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OracleError& e) {
        std::cerr << "oracle error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace triangulene
