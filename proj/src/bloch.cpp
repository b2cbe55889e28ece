#include "triangulene/bloch.hpp"

#include <cmath>
#include <numbers>

namespace triangulene {

namespace {
constexpr double kSqrt3 = std::numbers::sqrt3;
}

double KPoint::kx() const { return k1; }
double KPoint::ky() const { return (2.0 * k2 - k1) / kSqrt3; }

std::complex<double> alpha(const KPoint& k) {
    const std::complex<double> i(0.0, 1.0);
    return 1.0 + std::exp(-i * (k.k2 - k.k1)) + std::exp(-i * k.k2);
}

double dispersion(const KPoint& k) {
    const double s = k.k2 - 0.5 * k.k1; // = sqrt3 * ky / 2
    const double t = 2.0 * std::cos(0.5 * k.k1) + std::cos(s);
    const double sn = std::sin(s);
    return std::sqrt(sn * sn + t * t);
}

KPoint rotate_k(const KPoint& k) { return {-k.k2, k.k1 - k.k2}; }
KPoint mirror_k(const KPoint& k) { return {k.k1, k.k1 - k.k2}; }
KPoint mirror_y_k(const KPoint& k) { return {-k.k1, k.k2 - k.k1}; }

Star star(const KPoint& k) {
    Star out{};
    const double base = std::arg(alpha(k));
    int idx = 0;
    for (int refl = 0; refl < 2; ++refl) {
        KPoint m = refl ? mirror_k(k) : k;
        double phase = refl ? -base : base;
        for (int rot = 0; rot < 3; ++rot) {
            if (rot > 0) {
                phase += m.k2 - m.k1;
                m = rotate_k(m);
            }
            out.points[idx++] = {m, phase, rot, refl != 0, false};
            out.points[idx++] = {{-m.k1, -m.k2}, -phase, rot, refl != 0, true};
        }
    }
    out.degenerate = false;
    for (int a = 0; a < 12 && !out.degenerate; ++a)
        for (int b = a + 1; b < 12; ++b) {
            double d1 = out.points[a].k.k1 - out.points[b].k.k1;
            double d2 = out.points[a].k.k2 - out.points[b].k.k2;
            if (std::abs(d1) < 1e-9 && std::abs(d2) < 1e-9) {
                out.degenerate = true;
                break;
            }
        }
    return out;
}

} // namespace triangulene
