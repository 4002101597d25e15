// fields.hpp — named field constructors used by the solver corpus, the
// experiments, and the tests.

#pragma once

#include <random>

#include "beltrami/spectral.hpp"

namespace beltrami {

/// Cell-averaged indicator of the unit disk, supersampled ss x ss per cell
/// (default 8).  Averaging reduces Gibbs ringing in boundary cells without
/// smoothing the genuine discontinuity at the resolved scale.
inline GridField disk_indicator(const Grid& g, double radius = 1.0, int ss = 8) {
    GridField out(g);
    const double r2 = radius * radius;
    for (int k = 0; k < g.n; ++k) {
        const double y0 = g.coord(k);
        for (int j = 0; j < g.n; ++j) {
            const double x0 = g.coord(j);
            int hits = 0;
            for (int a = 0; a < ss; ++a) {
                const double x = x0 + ((a + 0.5) / ss - 0.5) * g.spacing;
                for (int b = 0; b < ss; ++b) {
                    const double y = y0 + ((b + 0.5) / ss - 0.5) * g.spacing;
                    if (x * x + y * y <= r2) ++hits;
                }
            }
            out.values[g.index(j, k)] = static_cast<double>(hits) / (ss * ss);
        }
    }
    return out;
}

/// exp(-π |(z - center)/width|²)
inline GridField gaussian(const Grid& g, double width = 1.0, Complex center = {0.0, 0.0}) {
    const double pi = 3.14159265358979323846;
    return sample_field(g, [&](Complex z) {
        const double r = std::abs(z - center) / width;
        return Complex{std::exp(-pi * r * r), 0.0};
    });
}

/// Plane wave e^{2πi Re(ξ̄ z)} at the lattice frequency with integer modes
/// (mx, my); exactly one DFT bin.
inline GridField plane_wave(const Grid& g, int mx, int my) {
    const double pi = 3.14159265358979323846;
    const double inv2L = 1.0 / (2.0 * g.half_side);
    return sample_field(g, [&](Complex z) {
        const double phase = 2.0 * pi * (mx * inv2L * z.real() + my * inv2L * z.imag());
        return Complex{std::cos(phase), std::sin(phase)};
    });
}

/// Gaussian envelope times a lattice carrier; approximately band-limited
/// around integer radius |m| = hypot(mx, my).
inline GridField wave_packet(const Grid& g, double width, int mx, int my,
                             Complex center = {0.0, 0.0}) {
    const double pi = 3.14159265358979323846;
    const double inv2L = 1.0 / (2.0 * g.half_side);
    return sample_field(g, [&](Complex z) {
        const double r = std::abs(z - center) / width;
        const double phase = 2.0 * pi * (mx * inv2L * z.real() + my * inv2L * z.imag());
        return std::exp(-pi * r * r) * Complex{std::cos(phase), std::sin(phase)};
    });
}

/// Smooth radial bump supported in |z - center| < radius (value 1 at center).
inline GridField bump_window(const Grid& g, double radius = 1.0, Complex center = {0.0, 0.0}) {
    return sample_field(g, [&](Complex z) {
        const double r = std::abs(z - center) / radius;
        if (r >= 1.0) return Complex{0.0, 0.0};
        return Complex{std::exp(1.0 - 1.0 / (1.0 - r * r)), 0.0};
    });
}

/// Random complex field with spectrum supported in 0 < |m| <= cutoff
/// (mean-zero, Nyquist-free by construction); normalized to unit sup-norm.
inline GridField random_band_limited(const Grid& g, std::mt19937& rng, int cutoff) {
    GridField spectrum(g);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < g.n; ++k) {
        const int mk = k < g.n / 2 ? k : k - g.n;
        for (int j = 0; j < g.n; ++j) {
            const int mj = j < g.n / 2 ? j : j - g.n;
            if (mj == 0 && mk == 0) continue;
            if (mj * mj + mk * mk > cutoff * cutoff) continue;
            spectrum.values[g.index(j, k)] = Complex{gauss(rng), gauss(rng)};
        }
    }
    GridField f = inverse_fft(spectrum);
    const double m = sup_norm(f);
    if (m > 0.0)
        for (Complex& v : f.values) v /= m;
    return f;
}

} // namespace beltrami
