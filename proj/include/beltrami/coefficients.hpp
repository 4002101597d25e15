// coefficients.hpp — validated Beltrami coefficient pairs.
//
// Ellipticity:  κ = ‖|μ| + |ν|‖_∞ < 1  is measured over the samples, and
// the supports must sit inside the closed unit disk (the standard
// normalization).  Construction fails otherwise.

#pragma once

#include "beltrami/grid.hpp"

namespace beltrami {

struct BeltramiCoefficients {
    GridField mu;
    GridField nu;
    double kappa = 0.0;          // measured ‖|μ|+|ν|‖_∞
    double support_radius = 0.0; // largest |z| carrying a nonzero sample
};

struct CoefficientOptions {
    // Accept supports outside the unit disk (still bounded by L/2) and
    // record the measured radius; the caller takes responsibility for the
    // missing rescaling of the normalization.
    bool allow_support_outside_disk = false;
};

inline BeltramiCoefficients validate_coefficients(const GridField& mu, const GridField& nu,
                                                  const CoefficientOptions& opts = {}) {
    check_same_grid(mu, nu, "validate_coefficients");
    const Grid& g = mu.grid;
    double kappa = 0.0, support = 0.0;
    for (int k = 0; k < g.n; ++k)
        for (int j = 0; j < g.n; ++j) {
            const int i = g.index(j, k);
            const double m = std::abs(mu.values[i]) + std::abs(nu.values[i]);
            if (m == 0.0) continue;
            kappa = std::max(kappa, m);
            support = std::max(support, std::abs(g.point(j, k)));
        }
    if (!(kappa < 1.0))
        throw std::invalid_argument("validate_coefficients: ellipticity violated, kappa = " +
                                    std::to_string(kappa));
    if (support > 1.0 && !opts.allow_support_outside_disk)
        throw std::invalid_argument(
            "validate_coefficients: support radius " + std::to_string(support) +
            " exceeds the unit disk (pass allow_support_outside_disk to override)");
    BeltramiCoefficients out;
    out.mu = mu;
    out.nu = nu;
    out.kappa = kappa;
    out.support_radius = support;
    return out;
}

} // namespace beltrami
