#include "triangulene/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

namespace triangulene {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

bool b_active(int n1, int n2, int N) {
    return n2 >= 0 && n2 <= N - 2 && n1 >= 1 && n1 <= N - 1 - n2;
}

bool a_active(int n1, int n2, int N) {
    return n1 >= 1 && n2 >= 1 && n1 + n2 <= N - 1;
}

// Active-site positions all lie on the doubled integer grid
// (2x, 2*sqrt3*y) = (2*n1 + n2, 3*n2 [+2 for B]), which gives an exact
// lookup key for geometric matching.
std::int64_t grid_key(double u) { return std::llround(u); }

} // namespace

Vec2 site_position(const SiteIndex& s) {
    double x = s.n1 + 0.5 * s.n2;
    double y = s.n2 * (kSqrt3 / 2.0);
    if (s.sub == Sublattice::B) y += 1.0 / kSqrt3;
    return {x, y};
}

int TrianguleneLattice::index_of(const SiteIndex& s) const {
    const int N = n_;
    if (s.sub == Sublattice::B) {
        if (!b_active(s.n1, s.n2, N)) return -1;
        int off = s.n2 * (N - 1) - s.n2 * (s.n2 - 1) / 2;
        return off + s.n1 - 1;
    }
    if (!a_active(s.n1, s.n2, N)) return -1;
    int base = N * (N - 1) / 2;
    int off = (s.n2 - 1) * (N - 1) - s.n2 * (s.n2 - 1) / 2;
    return base + off + s.n1 - 1;
}

Vec2 TrianguleneLattice::centroid() const {
    return {n_ / 2.0, n_ / (2.0 * kSqrt3)};
}

TrianguleneLattice::TrianguleneLattice(int N) : n_(N) {
    if (N < 2) throw SizeError("triangulene size must satisfy N >= 2, got " + std::to_string(N));

    for (int n2 = 0; n2 <= N - 2; ++n2)
        for (int n1 = 1; n1 <= N - 1 - n2; ++n1)
            sites_.push_back({Sublattice::B, n1, n2});
    for (int n2 = 1; n2 <= N - 2; ++n2)
        for (int n1 = 1; n1 <= N - 1 - n2; ++n1)
            sites_.push_back({Sublattice::A, n1, n2});

    positions_.reserve(sites_.size());
    for (const auto& s : sites_) positions_.push_back(site_position(s));

    // Every bond joins an A site to one of its three B neighbours.
    for (const auto& s : sites_) {
        if (s.sub != Sublattice::A) continue;
        int ai = index_of(s);
        const SiteIndex nb[3] = {{Sublattice::B, s.n1, s.n2},
                                 {Sublattice::B, s.n1 + 1, s.n2 - 1},
                                 {Sublattice::B, s.n1, s.n2 - 1}};
        for (const auto& b : nb) {
            int bi = index_of(b);
            if (bi >= 0) bonds_.push_back({bi, ai});
        }
    }
    std::sort(bonds_.begin(), bonds_.end());

    // Rotation permutation by geometric matching on the doubled grid.
    std::unordered_map<std::int64_t, int> lookup;
    lookup.reserve(sites_.size() * 2);
    auto key = [](std::int64_t kx, std::int64_t ky) { return kx * 4096 + ky; };
    for (int i = 0; i < site_count(); ++i) {
        const auto& p = positions_[i];
        lookup[key(grid_key(2.0 * p.x), grid_key(2.0 * kSqrt3 * p.y))] = i;
    }

    const Vec2 c = centroid();
    const double ct = -0.5;                // cos(2*pi/3)
    const double st = kSqrt3 / 2.0;        // sin(2*pi/3)
    rotation_.resize(site_count());
    for (int i = 0; i < site_count(); ++i) {
        double dx = positions_[i].x - c.x;
        double dy = positions_[i].y - c.y;
        double rx = c.x + ct * dx - st * dy;
        double ry = c.y + st * dx + ct * dy;
        double u = 2.0 * rx;
        double v = 2.0 * kSqrt3 * ry;
        if (std::abs(u - std::llround(u)) > 2e-9 || std::abs(v - std::llround(v)) > 2.0 * kSqrt3 * 1e-9)
            throw GeometryError("rotated site falls off the lattice grid");
        auto it = lookup.find(key(grid_key(u), grid_key(v)));
        if (it == lookup.end())
            throw GeometryError("rotation image of an active site is not active (N=" + std::to_string(N) + ")");
        rotation_[i] = it->second;
    }

    // Mirror x -> N - x in index form, cross-checked against geometry.
    reflection_.resize(site_count());
    for (int i = 0; i < site_count(); ++i) {
        const auto& s = sites_[i];
        SiteIndex m{s.sub, N - s.n1 - s.n2, s.n2};
        int j = index_of(m);
        if (j < 0) throw GeometryError("mirror image of an active site is not active");
        Vec2 pm = site_position(m);
        if (std::abs(pm.x - (N - positions_[i].x)) > 1e-9 || std::abs(pm.y - positions_[i].y) > 1e-9)
            throw GeometryError("mirror index map disagrees with geometry");
        reflection_[i] = j;
    }
}

TrianguleneLattice build_lattice(int N) { return TrianguleneLattice(N); }

RotationCenter rotation_center(int N) {
    if (N < 2) throw SizeError("triangulene size must satisfy N >= 2, got " + std::to_string(N));
    Vec2 c{N / 2.0, N / (2.0 * kSqrt3)};
    switch (N % 3) {
    case 0:
        return {CenterKind::ASite, c, SiteIndex{Sublattice::A, N / 3, N / 3}};
    case 2:
        return {CenterKind::BSite, c, SiteIndex{Sublattice::B, (N + 1) / 3, (N - 2) / 3}};
    default:
        return {CenterKind::HexagonCenter, c, std::nullopt};
    }
}

int layer_count(int N) {
    if (N < 2) throw SizeError("triangulene size must satisfy N >= 2, got " + std::to_string(N));
    return (N + 1) / 3; // ceil((N-1)/3)
}

} // namespace triangulene
