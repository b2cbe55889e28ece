#include "triangulene/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace triangulene {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

bool in_index_set(int q, int p, int N) {
    return p >= 1 && p <= (N - 1) / 2 && q >= p && q <= N - 1 - p;
}

std::complex<double> branch_value(std::complex<double> full, int branch) {
    return branch == 1 ? std::complex<double>(kSqrt2 * full.real(), 0.0)
                       : std::complex<double>(kSqrt2 * full.imag(), 0.0);
}

} // namespace

BlochSuperposition::BlochSuperposition(const KPoint& k, Band band) {
    const double sigma = band == Band::Plus ? 1.0 : -1.0;
    const double norm = 1.0 / std::sqrt(12.0);
    const double e = dispersion(k);
    energy_ = sigma * e;

    members_[0] = k;
    members_[3] = mirror_k(k);
    for (int j : {1, 2}) {
        members_[j] = rotate_k(members_[j - 1]);
        members_[3 + j] = rotate_k(members_[3 + j - 1]);
    }
    for (int j = 0; j < 6; ++j) {
        const double w = (j < 3 ? 1.0 : -1.0) * norm;
        weights_[j] = w;
        const std::complex<double> am = alpha(members_[j]);
        // Bloch eigenvector ratio at this member for energy sigma * |alpha|.
        lower_factors_[j] = w * (-sigma * std::conj(am) / std::abs(am));
    }
}

std::complex<double> BlochSuperposition::upper(int n1, int n2) const {
    std::complex<double> tot = 0.0;
    for (int j = 0; j < 6; ++j)
        tot += weights_[j] * std::polar(1.0, members_[j].k1 * n1 + members_[j].k2 * n2);
    return tot;
}

std::complex<double> BlochSuperposition::lower(int n1, int n2) const {
    std::complex<double> tot = 0.0;
    for (int j = 0; j < 6; ++j)
        tot += lower_factors_[j] * std::polar(1.0, members_[j].k1 * n1 + members_[j].k2 * n2);
    return tot;
}

Eigen::VectorXd periodic_branch_unnormalized(const QuantumNumbers& qn, const TrianguleneLattice& lat) {
    const int N = lat.size();
    if (!in_index_set(qn.q, qn.p, N))
        throw DomainError("(q,p)=(" + std::to_string(qn.q) + "," + std::to_string(qn.p) +
                          ") outside the quantized index set for N=" + std::to_string(N));
    if (qn.branch != 1 && qn.branch != 2) throw DomainError("branch must be 1 or 2");

    const BlochSuperposition wave(quantized_k(qn.q, qn.p, N), qn.band);
    Eigen::VectorXd v(lat.site_count());
    for (int i = 0; i < lat.site_count(); ++i) {
        const auto& s = lat.sites()[i];
        const std::complex<double> full =
            s.sub == Sublattice::A ? wave.upper(s.n1, s.n2) : wave.lower(s.n1, s.n2);
        v(i) = branch_value(full, qn.branch).real();
    }
    return v;
}

StateVector build_periodic_state(const QuantumNumbers& qn, const TrianguleneLattice& lat) {
    const int N = lat.size();
    if (qn.branch == 1 && qn.q == qn.p)
        throw DomainError("branch 1 vanishes on axial points (q = p = " + std::to_string(qn.q) + ")");

    Eigen::VectorXd v = periodic_branch_unnormalized(qn, lat);

    // The upper component must vanish on the three nodal lines.
    const BlochSuperposition wave(quantized_k(qn.q, qn.p, N), qn.band);
    for (int n = 0; n <= N; ++n) {
        for (const auto& amp : {wave.upper(0, n), wave.upper(n, 0), wave.upper(n, N - n)})
            if (std::abs(branch_value(amp, qn.branch)) > 1e-10)
                throw ConstructionError("nodal-line amplitude failed to vanish");
    }

    const double nrm = v.norm();
    if (nrm < 1e-9) throw DomainError("degenerate branch: superposition vanishes on the billiard");

    StateVector out;
    out.amplitudes = (v / nrm).cast<std::complex<double>>();
    out.energy = wave.energy();
    out.label.kind = StateLabel::Kind::Periodic;
    out.label.qn = qn;
    out.normalized = true;
    return out;
}

StateVector build_periodic_state(const QuantumNumbers& qn, int N) {
    return build_periodic_state(qn, TrianguleneLattice(N));
}

std::vector<FieldSample> extend_state_k(const KPoint& k, Band band, int branch, const Window& w) {
    if (branch != 1 && branch != 2) throw DomainError("branch must be 1 or 2");
    const BlochSuperposition wave(k, band);
    std::vector<FieldSample> out;
    out.reserve(2 * static_cast<std::size_t>(w.n1_max - w.n1_min + 1) * (w.n2_max - w.n2_min + 1));
    for (int n2 = w.n2_min; n2 <= w.n2_max; ++n2)
        for (int n1 = w.n1_min; n1 <= w.n1_max; ++n1) {
            out.push_back({Sublattice::A, n1, n2, branch_value(wave.upper(n1, n2), branch)});
            out.push_back({Sublattice::B, n1, n2, branch_value(wave.lower(n1, n2), branch)});
        }
    return out;
}

std::vector<FieldSample> extend_state(const QuantumNumbers& qn, int N, const Window& w) {
    if (!in_index_set(qn.q, qn.p, N))
        throw DomainError("(q,p) outside the quantized index set");
    return extend_state_k(quantized_k(qn.q, qn.p, N), qn.band, qn.branch, w);
}

} // namespace triangulene
