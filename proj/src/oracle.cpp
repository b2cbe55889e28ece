#include "triangulene/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "triangulene/spectrum.hpp"

namespace triangulene {

Eigen::MatrixXd build_hamiltonian(const TrianguleneLattice& lat) {
    const int n = lat.site_count();
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    for (const auto& b : lat.bonds()) {
        H(b[0], b[1]) = -1.0;
        H(b[1], b[0]) = -1.0;
    }
    return H;
}

EigenSystem numerical_spectrum(const Eigen::MatrixXd& H) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
    if (solver.info() != Eigen::Success)
        throw OracleError("dense eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

int kernel_dimension(const EigenSystem& es, double tol) {
    int dim = 0;
    for (int i = 0; i < es.values.size(); ++i)
        if (std::abs(es.values(i)) < tol) ++dim;
    return dim;
}

double completeness_check(const std::vector<StateVector>& states) {
    if (states.empty()) throw CountError("completeness_check: no states supplied");
    const Eigen::Index dim = states.front().amplitudes.size();
    if (static_cast<Eigen::Index>(states.size()) != dim)
        throw CountError("completeness_check: got " + std::to_string(states.size()) +
                         " states for dimension " + std::to_string(dim));
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& s : states) P += s.amplitudes * s.amplitudes.adjoint();
    P -= Eigen::MatrixXcd::Identity(dim, dim);
    return P.cwiseAbs().maxCoeff();
}

std::vector<StateVector> assemble_full_basis(const TrianguleneLattice& lat) {
    const int N = lat.size();
    std::vector<StateVector> states;
    states.reserve(static_cast<std::size_t>(N - 1) * (N - 1));

    for (const auto& pt : index_set(N)) {
        for (Band band : {Band::Plus, Band::Minus}) {
            if (pt.cls == PointClass::Interior) {
                StateVector s1 = build_periodic_state({pt.q, pt.p, band, 1}, lat);
                StateVector s2 = build_periodic_state({pt.q, pt.p, band, 2}, lat);
                // In-pair Gram-Schmidt, branch 1 first.
                s2.amplitudes -= s1.amplitudes.dot(s2.amplitudes) * s1.amplitudes;
                s2.amplitudes.normalize();
                states.push_back(std::move(s1));
                states.push_back(std::move(s2));
            } else {
                states.push_back(build_periodic_state({pt.q, pt.p, band, 2}, lat));
            }
        }
    }

    for (auto& e : edge_basis(lat).states) {
        StateVector s;
        s.amplitudes = std::move(e.amplitudes);
        s.energy = 0.0;
        s.label.kind = StateLabel::Kind::Edge;
        s.label.l = e.l;
        s.label.qrep = e.qrep;
        s.normalized = true;
        states.push_back(std::move(s));
    }
    return states;
}

double EmbeddingReport::residual() const {
    return std::max({eigen_residual, nodal_amplitude, decoupling_residual});
}

EmbeddingReport embedding_check_k(const KPoint& k, Band band, int branch, int N, int supercell) {
    if (supercell < 2) throw DomainError("supercell must be >= 2");
    const int L = supercell * N;
    const BlochSuperposition wave(k, band);
    const double E = wave.energy();

    // Patch amplitudes on the index square [0, L]^2, both sublattices.
    const int side = L + 1;
    Eigen::MatrixXd A(side, side), B(side, side);
    auto bval = [&](std::complex<double> z) {
        return branch == 1 ? std::numbers::sqrt2 * z.real() : std::numbers::sqrt2 * z.imag();
    };
    for (int n2 = 0; n2 <= L; ++n2)
        for (int n1 = 0; n1 <= L; ++n1) {
            A(n1, n2) = bval(wave.upper(n1, n2));
            B(n1, n2) = bval(wave.lower(n1, n2));
        }
    const double scale = std::max(A.cwiseAbs().maxCoeff(), B.cwiseAbs().maxCoeff());
    if (scale < 1e-12) throw ConstructionError("embedding check on a vanishing state");

    EmbeddingReport rep{0.0, 0.0, 0.0};
    for (int n2 = 0; n2 <= L; ++n2)
        for (int n1 = 0; n1 <= L; ++n1) {
            // A(n1,n2) couples to B(n1,n2), B(n1+1,n2-1), B(n1,n2-1).
            if (n2 >= 1 && n1 + 1 <= L) {
                const double sumB = B(n1, n2) + B(n1 + 1, n2 - 1) + B(n1, n2 - 1);
                rep.eigen_residual = std::max(rep.eigen_residual, std::abs(-sumB - E * A(n1, n2)));
                if (n1 % N == 0 || n2 % N == 0 || (n1 + n2) % N == 0) {
                    rep.nodal_amplitude = std::max(rep.nodal_amplitude, std::abs(A(n1, n2)));
                    rep.decoupling_residual = std::max(rep.decoupling_residual, std::abs(sumB));
                }
            }
            // B(n1,n2) couples to A(n1,n2), A(n1-1,n2+1), A(n1,n2+1).
            if (n1 >= 1 && n2 + 1 <= L) {
                const double sumA = A(n1, n2) + A(n1 - 1, n2 + 1) + A(n1, n2 + 1);
                rep.eigen_residual = std::max(rep.eigen_residual, std::abs(-sumA - E * B(n1, n2)));
            }
        }
    rep.eigen_residual /= scale;
    rep.nodal_amplitude /= scale;
    rep.decoupling_residual /= scale;
    return rep;
}

EmbeddingReport embedding_check(const QuantumNumbers& qn, int N, int supercell) {
    return embedding_check_k(quantized_k(qn.q, qn.p, N), qn.band, qn.branch, N, supercell);
}

ChainSpectrum chain_reference(int M) {
    if (M < 1) throw SizeError("chain length must be >= 1");
    ChainSpectrum out;
    out.energies.resize(M);
    out.vectors.resize(M, M);
    const double h = std::numbers::pi / (M + 1);
    const double norm = std::sqrt(2.0 / (M + 1));
    for (int n = 1; n <= M; ++n) {
        // descending n gives ascending 2 cos(pi n / (M+1))
        const int col = M - n;
        out.energies(col) = 2.0 * std::cos(n * h);
        for (int m = 1; m <= M; ++m) out.vectors(m - 1, col) = norm * std::sin(n * h * m);
    }
    return out;
}

VerifyReport verify_billiard(int N, double spectral_tol) {
    if (N < 2) throw SizeError("verify: N >= 2 required");
    if (N > kMaxOracleSize)
        throw SizeError("verify: dense oracle is limited to N <= " + std::to_string(kMaxOracleSize) +
                        ", got " + std::to_string(N));

    VerifyReport rep;
    rep.N = N;
    auto fail = [&rep](const std::string& what) { rep.failures.push_back(what); };

    const TrianguleneLattice lat(N);
    const Eigen::MatrixXd H = build_hamiltonian(lat);
    const EigenSystem oracle = numerical_spectrum(H);

    // Lattice counting and symmetry commutation.
    if (lat.site_count() != (N - 1) * (N - 1)) fail("site count");
    if (2 * lat.bond_count() != 3 * (N - 1) * (N - 2)) fail("bond count");
    {
        auto commutes = [&](const std::vector<int>& perm) {
            for (int i = 0; i < lat.site_count(); ++i)
                for (int j = 0; j < lat.site_count(); ++j)
                    if (H(perm[i], perm[j]) != H(i, j)) return false;
            return true;
        };
        if (!commutes(lat.rotation())) fail("rotation symmetry of H");
        if (!commutes(lat.reflection())) fail("mirror symmetry of H");
    }

    // Analytic spectrum against the oracle.
    const SpectrumTable table = analytic_spectrum(N);
    const std::vector<double> analytic = table.energies();
    if (static_cast<Eigen::Index>(analytic.size()) != oracle.values.size()) {
        fail("state count");
    } else {
        for (std::size_t i = 0; i < analytic.size(); ++i)
            rep.max_spectral_deviation =
                std::max(rep.max_spectral_deviation, std::abs(analytic[i] - oracle.values(i)));
        if (rep.max_spectral_deviation > spectral_tol) fail("spectral match");
    }

    rep.kernel_dim = kernel_dimension(oracle);
    if (rep.kernel_dim != N - 1) fail("kernel dimension");

    // Quantization condition at every index point.
    for (const auto& pt : index_set(N))
        if (!verify_diophantine(pt.q, pt.p, N)) fail("diophantine condition");

    // Full basis: residuals, edge-basis properties, completeness.
    const std::vector<StateVector> basis = assemble_full_basis(lat);
    double worst_residual = 0.0;
    for (const auto& s : basis)
        worst_residual =
            std::max(worst_residual, (H * s.amplitudes - s.energy * s.amplitudes).norm());
    if (worst_residual > 1e-9) fail("eigenvector residual");

    int edge_count = 0;
    double worst_a = 0.0, worst_rot = 0.0;
    for (const auto& s : basis) {
        if (s.label.kind != StateLabel::Kind::Edge) continue;
        ++edge_count;
        for (int i = 0; i < lat.site_count(); ++i)
            if (lat.sites()[i].sub == Sublattice::A)
                worst_a = std::max(worst_a, std::abs(s.amplitudes(i)));
        const Eigen::VectorXcd rv = apply_rotation(s.amplitudes, lat);
        const std::complex<double> zq = std::polar(1.0, 2.0 * std::numbers::pi * s.label.qrep / 3.0);
        worst_rot = std::max(worst_rot, (rv - zq * s.amplitudes).norm());
    }
    if (edge_count != N - 1) fail("edge state count");
    if (worst_a > 1e-12) fail("edge A-sublattice amplitudes");
    if (worst_rot > 1e-9) fail("edge rotation eigenvalue");

    // Edge basis must span the oracle kernel.
    {
        Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(lat.site_count(), lat.site_count());
        for (const auto& s : basis)
            if (s.label.kind == StateLabel::Kind::Edge) P += s.amplitudes * s.amplitudes.adjoint();
        for (int i = 0; i < oracle.values.size(); ++i) {
            if (std::abs(oracle.values(i)) >= 1e-8) continue;
            const Eigen::VectorXcd v = oracle.vectors.col(i).cast<std::complex<double>>();
            if ((v - P * v).norm() > 1e-9) fail("edge basis kernel span");
        }
    }

    rep.completeness_residual = completeness_check(basis);
    if (rep.completeness_residual > 1e-8) fail("completeness");

    std::sort(rep.failures.begin(), rep.failures.end());
    rep.failures.erase(std::unique(rep.failures.begin(), rep.failures.end()), rep.failures.end());
    rep.pass = rep.failures.empty();
    return rep;
}

} // namespace triangulene
