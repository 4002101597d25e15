// littlewood_paley.hpp — dyadic partition of unity on the frequency lattice.
//
// Windows are radial in the integer mode radius |m| (lattice units), built
// by telescoping a smooth cutoff:  with T_j(m) = σ(2 - |m|/2^j) for the
// order-3 smoothstep σ,
//
//   ψ_0 = T_0,   ψ_j = T_j - T_{j-1}   (j ≥ 1),
//
// so ψ_0 is supported in |m| < 2, ψ_j in 2^{j-1} < |m| < 2^{j+1}, every
// window lies in [0, 1], and Σ_{j≤J} ψ_j = T_J ≡ 1 for |m| ≤ 2^J exactly.
// First differences obey ‖Δψ_j‖_∞ ≲ 2^{-j}, the discrete form of the
// derivative-decay requirement.

#pragma once

#include "beltrami/grid.hpp"

namespace beltrami {

inline double smoothstep3(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * (3.0 - 2.0 * t);
}

struct DyadicPartition {
    Grid grid;
    int top_band = 0;                        // J
    std::vector<std::vector<double>> windows; // J+1 real arrays, field layout

    int band_count() const { return top_band + 1; }
};

/// Default truncation: J = log2(n) - 3.
inline int default_band_count(int n) {
    int J = -3;
    while (n > 1) {
        n >>= 1;
        ++J;
    }
    return J;
}

inline DyadicPartition build_partition(const Grid& g, int J) {
    if (J < 2) throw std::invalid_argument("build_partition: J must be at least 2");
    // support of ψ_J reaches |m| = 2^{J+1}, which must stay below Nyquist
    if ((1LL << (J + 1)) >= g.n / 2)
        throw std::invalid_argument("build_partition: band count exceeds the lattice Nyquist bound");
    DyadicPartition part;
    part.grid = g;
    part.top_band = J;
    part.windows.assign(J + 1, std::vector<double>(g.size(), 0.0));
    for (int k = 0; k < g.n; ++k) {
        const int mk = k < g.n / 2 ? k : k - g.n;
        for (int j = 0; j < g.n; ++j) {
            const int mj = j < g.n / 2 ? j : j - g.n;
            const double r = std::hypot(static_cast<double>(mj), static_cast<double>(mk));
            double prev = 0.0;
            for (int b = 0; b <= J; ++b) {
                const double t = smoothstep3(2.0 - r / static_cast<double>(1 << b));
                part.windows[b][g.index(j, k)] = t - prev;
                prev = t;
            }
        }
    }
    return part;
}

/// Window value at integer mode radius r (for inspection and tests).
inline double window_profile(int band, double r) {
    const double t = smoothstep3(2.0 - r / static_cast<double>(1 << band));
    if (band == 0) return t;
    const double prev = smoothstep3(2.0 - r / static_cast<double>(1 << (band - 1)));
    return t - prev;
}

} // namespace beltrami
