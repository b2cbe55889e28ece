#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "triangulene/lattice.hpp"
#include "triangulene/spectrum.hpp"

namespace triangulene {

/// Provenance of a state vector.
struct StateLabel {
    enum class Kind : std::uint8_t { Periodic, Edge } kind = Kind::Periodic;
    QuantumNumbers qn{};
    int l = 0;
    int qrep = 0;
};

/// Amplitudes over the canonical site ordering together with the energy and
/// the label that produced them. Periodic branch states are real-valued;
/// edge states with qrep = +-1 are genuinely complex.
struct StateVector {
    Eigen::VectorXcd amplitudes;
    double energy = 0.0;
    StateLabel label;
    bool normalized = false;
};

/// Six-member Bloch superposition for one quantized wavevector and band.
/// The upper component lives on A sites, the lower on the B partner of the
/// same cell; rotations of k enter with weight +1 and rotations of the
/// x-mirror image with weight -1, which zeroes the upper component on the
/// rows n2 = 0 and n1 = 0 identically and on n1 + n2 = N once k is
/// quantized. Each member's lower component carries the Bloch spinor ratio
/// -sigma * conj(alpha(m))/|alpha|, making the sum an exact eigenvector of
/// the -1-hopping Hamiltonian with energy sigma * |alpha(k)|.
class BlochSuperposition {
public:
    BlochSuperposition(const KPoint& k, Band band);

    std::complex<double> upper(int n1, int n2) const; // A(n1, n2)
    std::complex<double> lower(int n1, int n2) const; // B(n1, n2)
    double energy() const { return energy_; }

private:
    std::array<KPoint, 6> members_;
    std::array<std::complex<double>, 6> weights_;       // +-1/sqrt(12)
    std::array<std::complex<double>, 6> lower_factors_; // weight * spinor ratio
    double energy_;
};

/// Branch evaluation (branch 1 = sqrt2 * Re, branch 2 = sqrt2 * Im) over the
/// billiard, without normalization. Vanishes identically for branch 1 on
/// axial points.
Eigen::VectorXd periodic_branch_unnormalized(const QuantumNumbers& qn, const TrianguleneLattice& lat);

/// Unit-norm periodic eigenstate. Throws DomainError when (q, p) is outside
/// the index set or when branch 1 is requested on an axial point, and
/// ConstructionError if the nodal amplitudes fail to vanish.
StateVector build_periodic_state(const QuantumNumbers& qn, const TrianguleneLattice& lat);
StateVector build_periodic_state(const QuantumNumbers& qn, int N);

/// Inclusive index window on the infinite sheet.
struct Window {
    int n1_min, n1_max;
    int n2_min, n2_max;
};

struct FieldSample {
    Sublattice sub;
    int n1, n2;
    std::complex<double> value;
};

/// Evaluates the same branch superposition at every (n1, n2) of the window,
/// on both sublattices and with no billiard restriction. Restricted to the
/// billiard it agrees with the unnormalized state.
std::vector<FieldSample> extend_state(const QuantumNumbers& qn, int N, const Window& w);
std::vector<FieldSample> extend_state_k(const KPoint& k, Band band, int branch, const Window& w);

} // namespace triangulene
