#include "triangulene/edge.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "triangulene/errors.hpp"

namespace triangulene {

namespace {

const std::complex<double> kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0); // e^{i 2pi/3}

std::complex<double> omega_pow(int e) {
    e = ((e % 3) + 3) % 3;
    if (e == 0) return {1.0, 0.0};
    return e == 1 ? kOmega : std::conj(kOmega);
}

} // namespace

bool a_sublattice_vanishing_check(int N) {
    TrianguleneLattice lat(N);
    const int na = (N - 1) * (N - 2) / 2;
    if (na == 0) return true;

    // One equation per active B site: the three A neighbours (those on the
    // nodal lines being fixed to zero) must sum to zero.
    const int nb = N * (N - 1) / 2;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(nb, na);
    const int a_base = nb;
    int row = 0;
    for (int i = 0; i < lat.site_count(); ++i) {
        const auto& s = lat.sites()[i];
        if (s.sub != Sublattice::B) continue;
        const SiteIndex nbr[3] = {{Sublattice::A, s.n1, s.n2},
                                  {Sublattice::A, s.n1 - 1, s.n2 + 1},
                                  {Sublattice::A, s.n1, s.n2 + 1}};
        for (const auto& a : nbr) {
            int j = lat.index_of(a);
            if (j >= 0) M(row, j - a_base) += 1.0;
        }
        ++row;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
    qr.setThreshold(1e-10);
    return qr.rank() == na;
}

SeedState build_seed(int l, const TrianguleneLattice& lat) {
    const int N = lat.size();
    const int NL = layer_count(N);
    if (l < 1 || l > NL)
        throw DomainError("seed layer out of range: l=" + std::to_string(l));

    SeedState seed{l, Eigen::VectorXd::Zero(lat.site_count())};
    auto b_at = [&](int n1, int n2) -> double& {
        int i = lat.index_of({Sublattice::B, n1, n2});
        if (i < 0) throw ConstructionError("seed row index out of range");
        return seed.amplitudes(i);
    };

    for (int n1 = 1; n1 <= N - l; ++n1)
        b_at(n1, l - 1) = (n1 % 2 == 0) ? 1.0 : -1.0;

    // Mirror parity of the whole seed; the alternating row already has it.
    const double par = ((N + l) % 2 == 1) ? 1.0 : -1.0;

    for (int n2 = l - 1; n2 >= 1; --n2) {
        // Solve row n2-1 from row n2: b(n1+1) + b(n1) = -b(n1, n2).
        // The general solution is particular + t * (-1)^{n1-1}; fix t.
        const int len = N - n2; // sites n1 = 1..len in row n2-1
        Eigen::VectorXd part = Eigen::VectorXd::Zero(len + 1);
        Eigen::VectorXd hom = Eigen::VectorXd::Zero(len + 1);
        part(1) = 0.0;
        hom(1) = 1.0;
        for (int n1 = 1; n1 <= N - 1 - n2; ++n1) {
            part(n1 + 1) = -b_at(n1, n2) - part(n1);
            hom(n1 + 1) = -hom(n1);
        }

        double t = 0.0;
        bool fixed = false;
        for (int m = 1; m <= len; ++m) {
            const double hc = hom(m) - par * hom(len + 1 - m);
            if (std::abs(hc) > 1e-12) {
                t = -(part(m) - par * part(len + 1 - m)) / hc;
                fixed = true;
                break;
            }
        }
        if (!fixed) {
            // Parity holds for every t. Odd rows get a central node; even
            // rows fall back to the minimum-norm continuation.
            if (len % 2 == 1) {
                const int c = (len + 1) / 2;
                t = -part(c) / hom(c);
            } else {
                t = -part.segment(1, len).dot(hom.segment(1, len)) /
                    hom.segment(1, len).squaredNorm();
            }
        }

        double scale = 1.0;
        for (int m = 1; m <= len; ++m) {
            b_at(m, n2 - 1) = part(m) + t * hom(m);
            scale = std::max(scale, std::abs(b_at(m, n2 - 1)));
        }
        for (int m = 1; m <= len; ++m)
            if (std::abs(b_at(m, n2 - 1) - par * b_at(len + 1 - m, n2 - 1)) > 1e-9 * scale)
                throw ConstructionError("seed row lost mirror parity (l=" + std::to_string(l) + ")");
    }
    return seed;
}

Eigen::VectorXcd apply_rotation(const Eigen::VectorXcd& v, const TrianguleneLattice& lat) {
    Eigen::VectorXcd out(v.size());
    const auto& perm = lat.rotation();
    for (int i = 0; i < v.size(); ++i) out(perm[i]) = v(i);
    return out;
}

Eigen::VectorXcd apply_reflection(const Eigen::VectorXcd& v, const TrianguleneLattice& lat) {
    Eigen::VectorXcd out(v.size());
    const auto& perm = lat.reflection();
    for (int i = 0; i < v.size(); ++i) out(perm[i]) = v(i);
    return out;
}

Eigen::VectorXcd project_c3v(const Eigen::VectorXcd& v, int qrep, const TrianguleneLattice& lat) {
    if (qrep < -1 || qrep > 1) throw DomainError("qrep must be -1, 0 or 1");
    Eigen::VectorXcd r1 = apply_rotation(v, lat);
    Eigen::VectorXcd r2 = apply_rotation(r1, lat);
    return (v + omega_pow(-qrep) * r1 + omega_pow(qrep) * r2) / 3.0;
}

Eigen::VectorXcd project_c3v(const SeedState& seed, int qrep, const TrianguleneLattice& lat) {
    return project_c3v(seed.amplitudes.cast<std::complex<double>>().eval(), qrep, lat);
}

std::vector<std::pair<int, int>> edge_state_labels(int N) {
    const int NL = layer_count(N);
    std::vector<std::pair<int, int>> labels;
    for (int l = 1; l <= NL; ++l) {
        if (l < NL) {
            for (int q : {-1, 0, 1}) labels.emplace_back(l, q);
        } else {
            switch (N % 3) {
            case 1:
                for (int q : {-1, 0, 1}) labels.emplace_back(l, q);
                break;
            case 2:
                labels.emplace_back(l, 0);
                break;
            default:
                labels.emplace_back(l, -1);
                labels.emplace_back(l, 1);
                break;
            }
        }
    }
    return labels;
}

EdgeBasis edge_basis(const TrianguleneLattice& lat) {
    const int N = lat.size();
    auto labels = edge_state_labels(N);

    std::vector<SeedState> seeds;
    for (int l = 1; l <= layer_count(N); ++l) seeds.push_back(build_seed(l, lat));

    EdgeBasis basis;
    for (int q : {-1, 0, 1}) {
        std::vector<Eigen::VectorXcd> kept;
        for (const auto& [l, qrep] : labels) {
            if (qrep != q) continue;
            Eigen::VectorXcd v = project_c3v(seeds[l - 1], q, lat);
            // two passes: classical GS alone drifts above 1e-10 for deep layers
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : kept) v -= u.dot(v) * u;
            const double nrm = v.norm();
            if (nrm < 1e-8)
                throw ConstructionError("edge seed (l=" + std::to_string(l) +
                                        ", q=" + std::to_string(q) + ") is dependent");
            v /= nrm;
            kept.push_back(v);
            basis.states.push_back({l, q, v});
        }
    }

    if (static_cast<int>(basis.states.size()) != N - 1)
        throw ConstructionError("edge basis dimension mismatch: got " +
                                std::to_string(basis.states.size()) + ", expected " +
                                std::to_string(N - 1));
    return basis;
}

} // namespace triangulene
