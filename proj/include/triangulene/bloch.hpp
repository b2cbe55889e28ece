#pragma once

#include <array>
#include <complex>

namespace triangulene {

/// Wavevector stored as its projections onto the lattice vectors:
/// k1 = k.a1, k2 = k.a2. Cartesian recovery: kx = k1, ky = (2 k2 - k1)/sqrt3.
struct KPoint {
    double k1;
    double k2;

    double kx() const;
    double ky() const;
};

/// Structure factor alpha(k) = 1 + e^{-i(k2-k1)} + e^{-i k2}.
/// |alpha| is the band energy, arg alpha the spinor phase.
std::complex<double> alpha(const KPoint& k);

/// Positive band E_+(k), written in the sum-of-squares form
/// sqrt(sin^2(s) + (2 cos(k1/2) + cos(s))^2) with s = k2 - k1/2,
/// which stays well-conditioned near the band centre. Equals |alpha(k)|.
double dispersion(const KPoint& k);

/// Counterclockwise 2*pi/3 rotation acting on (k1, k2): (-k2, k1 - k2).
KPoint rotate_k(const KPoint& k);

/// Mirror ky -> -ky acting on (k1, k2): (k1, k1 - k2).
KPoint mirror_k(const KPoint& k);

/// Mirror kx -> -kx acting on (k1, k2): (-k1, k2 - k1).
KPoint mirror_y_k(const KPoint& k);

/// One member of the 12-vector symmetry star: the transformed wavevector,
/// its structure-factor phase phi (so alpha(member) = |alpha(k)| e^{i phi}),
/// and the group element R^rot * mirror^reflected * inversion^inverted
/// that produced it.
struct StarPoint {
    KPoint k;
    double phase;
    int rot;        // 0, 1, 2
    bool reflected;
    bool inverted;
};

struct Star {
    std::array<StarPoint, 12> points;
    bool degenerate; // true when two members coincide (k on a symmetry line)
};

/// The full C6v orbit of k with per-member phases. Phases are generated by
/// composing arg alpha(R m) = m.(a2-a1) + arg alpha(m) with conjugation under
/// mirror and inversion; they are exact identities of the structure factor.
Star star(const KPoint& k);

} // namespace triangulene
