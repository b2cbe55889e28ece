#include "triangulene/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "triangulene/edge.hpp"

namespace triangulene {

KPoint quantized_k(int q, int p, int N) {
    if (N < 2) throw SizeError("quantized_k: N >= 2 required");
    const double f = 2.0 * std::numbers::pi / (3.0 * N);
    return {f * (2 * q + p), f * (2 * p + q)};
}

bool diophantine_holds(const KPoint& k, int N, double tol) {
    // Six star members: rotations of k carry phase +a, rotations of the
    // kx -> -kx mirror image carry -a. The first two line sums then cancel
    // identically; the closing line cancels only for quantized k.
    const double a = 0.3;
    KPoint plus[3], minus[3];
    plus[0] = k;
    minus[0] = mirror_y_k(k);
    for (int j = 1; j < 3; ++j) {
        plus[j] = rotate_k(plus[j - 1]);
        minus[j] = rotate_k(minus[j - 1]);
    }
    for (int n = 1; n <= N; ++n) {
        double s1 = 0.0, s2 = 0.0, s3 = 0.0;
        for (int j = 0; j < 3; ++j) {
            s1 += std::sin(plus[j].k1 * n + a) + std::sin(minus[j].k1 * n - a);
            s2 += std::sin(plus[j].k2 * n + a) + std::sin(minus[j].k2 * n - a);
            s3 += std::sin(plus[j].k1 * n + plus[j].k2 * (N - n) + a) +
                  std::sin(minus[j].k1 * n + minus[j].k2 * (N - n) - a);
        }
        if (std::abs(s1) > tol || std::abs(s2) > tol || std::abs(s3) > tol) return false;
    }
    return true;
}

bool verify_diophantine(int q, int p, int N, double tol) {
    return diophantine_holds(quantized_k(q, p, N), N, tol);
}

std::vector<IndexPoint> index_set(int N) {
    if (N < 2) throw SizeError("index_set: N >= 2 required");
    std::vector<IndexPoint> out;
    for (int p = 1; p <= (N - 1) / 2; ++p)
        for (int q = p; q <= N - 1 - p; ++q)
            out.push_back({q, p, q == p ? PointClass::Axial : PointClass::Interior});
    return out;
}

IndexCounts index_counts(int N) {
    if (N < 2) throw SizeError("index_counts: N >= 2 required");
    const long half = (N - 1) / 2;
    IndexCounts c{};
    c.interior = (static_cast<long>(N - 1) * (N - 2) - 2 * half) / 4;
    c.axial = half;
    c.nonzero = 4 * c.interior + 2 * c.axial;
    c.zero = N - 1;
    c.total = static_cast<long>(N - 1) * (N - 1);
    return c;
}

double energy(int q, int p, int N, Band band) {
    const double e = dispersion(quantized_k(q, p, N));
    return band == Band::Plus ? e : -e;
}

long SpectrumTable::total_multiplicity() const {
    long t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

std::vector<double> SpectrumTable::energies() const {
    std::vector<double> out;
    for (const auto& e : entries)
        out.insert(out.end(), e.multiplicity, e.energy);
    std::sort(out.begin(), out.end());
    return out;
}

SpectrumTable analytic_spectrum(int N, double group_tol) {
    if (N < 2) throw SizeError("analytic_spectrum: N >= 2 required");

    struct Level {
        double e;
        SpectrumLabel label;
    };
    std::vector<Level> levels;
    for (const auto& pt : index_set(N)) {
        const double e = energy(pt.q, pt.p, N);
        for (Band band : {Band::Plus, Band::Minus}) {
            const double se = band == Band::Plus ? e : -e;
            for (int branch : {1, 2}) {
                if (branch == 1 && pt.cls == PointClass::Axial) continue;
                SpectrumLabel lab;
                lab.kind = SpectrumLabel::Kind::Periodic;
                lab.qn = {pt.q, pt.p, band, branch};
                levels.push_back({se, lab});
            }
        }
    }
    for (const auto& [l, qrep] : edge_state_labels(N)) {
        SpectrumLabel lab;
        lab.kind = SpectrumLabel::Kind::Edge;
        lab.l = l;
        lab.qrep = qrep;
        levels.push_back({0.0, lab});
    }

    std::stable_sort(levels.begin(), levels.end(),
                     [](const Level& a, const Level& b) { return a.e < b.e; });

    SpectrumTable table{N, {}};
    for (const auto& lv : levels) {
        if (!table.entries.empty() && std::abs(lv.e - table.entries.back().energy) < group_tol) {
            table.entries.back().multiplicity += 1;
            table.entries.back().labels.push_back(lv.label);
        } else {
            table.entries.push_back({lv.e, 1, {lv.label}});
        }
    }
    return table;
}

std::string to_string(Band b) { return b == Band::Plus ? "+" : "-"; }
std::string to_string(PointClass c) { return c == PointClass::Interior ? "interior" : "axial"; }

} // namespace triangulene
