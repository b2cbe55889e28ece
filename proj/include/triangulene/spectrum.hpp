#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triangulene/bloch.hpp"
#include "triangulene/errors.hpp"

namespace triangulene {

enum class Band : std::uint8_t { Plus, Minus };

/// Label of one periodic eigenstate: quantized point (q, p), band sign and
/// sinusoidal branch (1 = real part, 2 = imaginary part of the superposition).
struct QuantumNumbers {
    int q;
    int p;
    Band band;
    int branch; // 1 or 2; branch 1 is absent on axial points (q == p)

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Quantized wavevector of the (q, p) point:
/// k1 = 2*pi*(2q+p)/(3N), k2 = 2*pi*(2p+q)/(3N).
KPoint quantized_k(int q, int p, int N);

/// Whether the three nodal-line sine sums cancel for this wavevector, i.e.
/// sum_{r=1..6} sin(k_r . a_i n_i + alpha_r) vanishes for i = 1, 2 and for
/// the closing line n*a1 + (N-n)*a2, for all n in 1..N, with member phases
/// (+a, -a) on mirror-paired star vectors. Exact for quantized k.
bool diophantine_holds(const KPoint& k, int N, double tol = 1e-10);
bool verify_diophantine(int q, int p, int N, double tol = 1e-10);

enum class PointClass : std::uint8_t { Interior, Axial };

struct IndexPoint {
    int q;
    int p;
    PointClass cls;
};

/// All quantized points of the fundamental sector:
/// 1 <= p <= floor((N-1)/2), p <= q <= N-1-p; axial means q == p.
/// Empty for N = 2.
std::vector<IndexPoint> index_set(int N);

struct IndexCounts {
    long interior;  // (N-1)(N-2)/4 - floor((N-1)/2)/2
    long axial;     // floor((N-1)/2)
    long nonzero;   // 4*interior + 2*axial = (N-1)(N-2)
    long zero;      // N-1
    long total;     // (N-1)^2
};

IndexCounts index_counts(int N);

/// Signed band energy of the quantized point, in the sum-of-squares form.
double energy(int q, int p, int N, Band band = Band::Plus);

/// Spectrum entry label: either a periodic (q, p, band, branch) state or a
/// zero-energy edge state (l, qrep).
struct SpectrumLabel {
    enum class Kind : std::uint8_t { Periodic, Edge } kind;
    QuantumNumbers qn{}; // Periodic
    int l = 0;           // Edge
    int qrep = 0;        // Edge
};

struct SpectrumEntry {
    double energy;
    int multiplicity;
    std::vector<SpectrumLabel> labels;
};

/// Full level list: entries sorted by energy, degenerate levels merged
/// within group_tol, multiplicities summed to (N-1)^2.
struct SpectrumTable {
    int N;
    std::vector<SpectrumEntry> entries;

    long total_multiplicity() const;
    /// All (N-1)^2 energies with multiplicity, ascending.
    std::vector<double> energies() const;
};

SpectrumTable analytic_spectrum(int N, double group_tol = 1e-9);

std::string to_string(Band b);
std::string to_string(PointClass c);

} // namespace triangulene
