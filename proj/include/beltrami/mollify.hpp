// mollify.hpp — approximation of the identity on the grid.
//
// ψ is the standard positive radial bump exp(-1/(1-|z|²)) on |z| < 1, and
// ψ_m(z) = m²ψ(mz).  The discrete mass is renormalized to exactly 1, so
// mollification preserves constants exactly and the sup-norm and the
// ellipticity bound ‖|μ|+|ν|‖_∞ are never increased (the weights are
// nonnegative and sum to one).

#pragma once

#include "beltrami/spectral.hpp"

namespace beltrami {

/// Unnormalized bump profile; radial, supported in the unit disk.
inline double bump_profile(double r) {
    if (r >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - r * r));
}

/// ψ_m sampled on the grid and renormalized so that spacing²·Σψ = 1 exactly.
inline GridField mollifier_field(const Grid& g, int m) {
    if (m <= 0) throw std::invalid_argument("mollifier_field: n_moll must be positive");
    GridField psi(g);
    double sum = 0.0;
    for (int k = 0; k < g.n; ++k)
        for (int j = 0; j < g.n; ++j) {
            const double v = bump_profile(std::abs(g.point(j, k)) * m);
            psi.values[g.index(j, k)] = v;
            sum += v;
        }
    if (sum <= 0.0)
        throw std::invalid_argument("mollifier_field: bump unresolved at this grid spacing");
    const double cell = g.spacing * g.spacing;
    const double scale = 1.0 / (sum * cell);
    for (Complex& v : psi.values) v *= scale;
    return psi;
}

/// field ∗ ψ_{n_moll}, computed spectrally (circular convolution; the
/// coefficients are supported well inside the torus, so wrap-around is void).
inline GridField mollify(const GridField& f, int n_moll) {
    return convolve(f, mollifier_field(f.grid, n_moll));
}

} // namespace beltrami
