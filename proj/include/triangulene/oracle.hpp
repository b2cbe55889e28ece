#pragma once

#include <vector>

#include <Eigen/Dense>

#include "triangulene/edge.hpp"
#include "triangulene/lattice.hpp"
#include "triangulene/states.hpp"

namespace triangulene {

/// Largest size the dense oracle accepts ((N-1)^2 = 1521 sites).
inline constexpr int kMaxOracleSize = 40;

/// Dense nearest-neighbour Hamiltonian: -1 on every bond, 0 elsewhere.
Eigen::MatrixXd build_hamiltonian(const TrianguleneLattice& lat);

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXd vectors; // columns match values
};

/// Full symmetric eigendecomposition; throws OracleError on failure.
EigenSystem numerical_spectrum(const Eigen::MatrixXd& H);

/// Dimension of the kernel of H (eigenvalues below tol in magnitude).
int kernel_dimension(const EigenSystem& es, double tol = 1e-8);

/// Max-norm of (sum of projectors - identity) over the supplied states.
/// Throws CountError unless exactly dim-many states are supplied.
double completeness_check(const std::vector<StateVector>& states);

/// All (N-1)^2 analytic eigenstates: periodic branch pairs orthonormalized
/// in-pair (branch 1 first), then the edge basis.
std::vector<StateVector> assemble_full_basis(const TrianguleneLattice& lat);

struct EmbeddingReport {
    double eigen_residual;       // worst (H - E) psi over interior patch sites
    double nodal_amplitude;      // worst |psi| on image nodal A sites
    double decoupling_residual;  // worst B-neighbour sum across a nodal site
    double residual() const;     // max of the three, relative to max |psi|
};

/// Extends the state over a supercell x supercell patch of the sheet and
/// checks the eigenvalue relation at every site whose neighbourhood is
/// inside the patch, plus the vanishing/decoupling conditions on the image
/// nodal lines. Quantized wavevectors pass at machine precision; perturbed
/// ones fail through the nodal terms.
EmbeddingReport embedding_check(const QuantumNumbers& qn, int N, int supercell);
EmbeddingReport embedding_check_k(const KPoint& k, Band band, int branch, int N, int supercell);

struct ChainSpectrum {
    Eigen::VectorXd energies;  // 2 cos(pi n / (M+1)), ascending
    Eigen::MatrixXd vectors;   // sinusoidal, unit norm, columns match energies
};

/// Closed-form spectrum of the open M-site chain.
ChainSpectrum chain_reference(int M);

struct VerifyReport {
    int N = 0;
    double max_spectral_deviation = 0.0;
    int kernel_dim = 0;
    double completeness_residual = 0.0;
    bool pass = false;
    std::vector<std::string> failures;
};

/// Runs the full analytic-vs-oracle comparison at size N: spectral match,
/// kernel dimension, state residuals, edge-basis checks, completeness and
/// the quantization condition. spectral_tol gates the eigenvalue match.
VerifyReport verify_billiard(int N, double spectral_tol = 1e-9);

} // namespace triangulene
