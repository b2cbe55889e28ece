#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "triangulene/lattice.hpp"

namespace triangulene {

/// Zero-mode seed: B-sublattice amplitudes generated downward from an
/// alternating-sign row, with all A amplitudes identically zero.
struct SeedState {
    int l;                      // layer index, 1..layer_count(N)
    Eigen::VectorXd amplitudes; // over the canonical site ordering
};

/// Rank check of the A-sublattice zero-energy system: with the nodal lines
/// imposed, the recurrence forces every A amplitude of an E = 0 state to
/// vanish. Returns true when the system's kernel is trivial.
bool a_sublattice_vanishing_check(int N);

/// Seed state |l>: row n2 = l-1 holds (-1)^{n1}, rows above are zero, and
/// each row below is the unique zero-mode continuation closed by mirror
/// parity (antisymmetric for N+l even, symmetric for N+l odd; parity-neutral
/// rows are closed by a central node, or minimum norm when of even length).
SeedState build_seed(int l, const TrianguleneLattice& lat);

/// Applies P_R to a site-amplitude vector (image of site i is rotation()[i]).
Eigen::VectorXcd apply_rotation(const Eigen::VectorXcd& v, const TrianguleneLattice& lat);
Eigen::VectorXcd apply_reflection(const Eigen::VectorXcd& v, const TrianguleneLattice& lat);

/// Character projector Pi_q = (1/3)(1 + z^{-q} P_R + z^{q} P_R^2) with
/// z = e^{i 2 pi / 3}; idempotent, and P_R Pi_q = z^q Pi_q.
Eigen::VectorXcd project_c3v(const Eigen::VectorXcd& v, int qrep, const TrianguleneLattice& lat);
Eigen::VectorXcd project_c3v(const SeedState& seed, int qrep, const TrianguleneLattice& lat);

struct EdgeState {
    int l;
    int qrep; // -1, 0, 1
    Eigen::VectorXcd amplitudes;
};

/// Orthonormal basis of the zero-energy subspace, N-1 states labelled (l, q).
struct EdgeBasis {
    std::vector<EdgeState> states;
};

/// The (l, q) labels the basis is generated from: all q for l < N_L, and for
/// the innermost layer all q when N % 3 == 1, only q = 0 when N % 3 == 2,
/// only q = +-1 when N % 3 == 0. Exactly N-1 labels.
std::vector<std::pair<int, int>> edge_state_labels(int N);

/// Builds the seeds, projects them, and Gram-Schmidt-orthonormalizes within
/// each fixed q over increasing l. Throws ConstructionError if the result
/// does not span an (N-1)-dimensional space.
EdgeBasis edge_basis(const TrianguleneLattice& lat);

} // namespace triangulene
