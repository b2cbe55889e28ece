#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "triangulene/errors.hpp"

namespace triangulene {

enum class Sublattice : std::uint8_t { A, B };

/// One carbon site, addressed by sublattice tag and triangular-lattice
/// integers (n1, n2). A sites sit at n1*a1 + n2*a2 with a1 = (1, 0) and
/// a2 = (1/2, sqrt3/2); the B partner of a cell is displaced by (0, 1/sqrt3).
struct SiteIndex {
    Sublattice sub;
    int n1;
    int n2;

    friend bool operator==(const SiteIndex&, const SiteIndex&) = default;
};

struct Vec2 {
    double x;
    double y;
};

/// Finite zig-zag triangle with (N-1)^2 active sites, bounded by the three
/// A-site nodal lines n1 = 0, n2 = 0 and n1 + n2 = N.
///
/// Site ordering is canonical: all B sites first, then all A sites, each
/// block sorted lexicographically by (n2, n1). Every exported index refers
/// to this ordering. Instances are immutable after construction.
class TrianguleneLattice {
public:
    explicit TrianguleneLattice(int N);

    int size() const { return n_; }
    int site_count() const { return static_cast<int>(sites_.size()); }
    int bond_count() const { return static_cast<int>(bonds_.size()); }

    const std::vector<SiteIndex>& sites() const { return sites_; }
    const std::vector<Vec2>& positions() const { return positions_; }
    const std::vector<std::array<int, 2>>& bonds() const { return bonds_; }

    /// Site permutation of the counterclockwise 2*pi/3 rotation about the
    /// triangle centroid: rotation()[i] is the site occupying the rotated
    /// image of site i. Applying it three times is the identity.
    const std::vector<int>& rotation() const { return rotation_; }

    /// Site permutation of the vertical mirror x -> N - x. An involution.
    const std::vector<int>& reflection() const { return reflection_; }

    /// Index of an active site in the canonical ordering, or -1.
    int index_of(const SiteIndex& s) const;
    bool is_active(const SiteIndex& s) const { return index_of(s) >= 0; }

    Vec2 centroid() const;

private:
    int n_;
    std::vector<SiteIndex> sites_;
    std::vector<Vec2> positions_;
    std::vector<std::array<int, 2>> bonds_;
    std::vector<int> rotation_;
    std::vector<int> reflection_;
};

/// Builds the size-N billiard. Throws SizeError for N < 2 and GeometryError
/// if symmetry matching fails (which would indicate an internal bug).
TrianguleneLattice build_lattice(int N);

enum class CenterKind { HexagonCenter, ASite, BSite };

struct RotationCenter {
    CenterKind kind;
    Vec2 coord;
    std::optional<SiteIndex> site; // set for ASite / BSite
};

/// What sits at the rotation centre (N/2, N/(2*sqrt3)): a hexagon centre for
/// N % 3 == 1, an A atom for N % 3 == 0, a B atom for N % 3 == 2.
RotationCenter rotation_center(int N);

/// Number of triangular layers, counted outermost-in: ceil((N-1)/3).
int layer_count(int N);

/// Cartesian position of a site index (active or not).
Vec2 site_position(const SiteIndex& s);

} // namespace triangulene
