// oracles.hpp — closed-form quasiconformal ground truth.
//
// The radial stretch: for 0 < k < 1 and α = 2k/(1-k),
//
//   f(z) = z|z|^α  on |z| ≤ 1,   f(z) = z  outside,
//   ∂f  = (1 + α/2)|z|^α,        ∂̄f = (α/2) z² |z|^{α-2} =: h,
//   μ   = ∂̄f / ∂f = k·(z/z̄)·χ_D,  ν = 0.
//
// The triple satisfies the Beltrami equation identically; samples are exact
// formula evaluations (μ(0) := 0, a measure-zero convention).

#pragma once

#include "beltrami/grid.hpp"

namespace beltrami {

struct RadialStretchOracle {
    double k = 0.0;
    double alpha = 0.0;
    GridField mu;
    GridField f;  // the full map f(z)
    GridField h;  // ∂̄f
};

inline RadialStretchOracle radial_stretch_oracle(double k, const Grid& g) {
    if (!(k > 0.0 && k <= 0.9))
        throw std::invalid_argument("radial_stretch_oracle: k must lie in (0, 0.9]");
    RadialStretchOracle out;
    out.k = k;
    out.alpha = 2.0 * k / (1.0 - k);
    const double al = out.alpha;
    out.mu = sample_field(g, [&](Complex z) {
        const double r = std::abs(z);
        if (r == 0.0 || r > 1.0) return Complex{0.0, 0.0};
        return k * z / std::conj(z);
    });
    out.f = sample_field(g, [&](Complex z) {
        const double r = std::abs(z);
        if (r == 0.0 || r > 1.0) return z;
        return z * std::pow(r, al);
    });
    out.h = sample_field(g, [&](Complex z) {
        const double r = std::abs(z);
        if (r == 0.0 || r > 1.0) return Complex{0.0, 0.0};
        return 0.5 * al * z * z * std::pow(r, al - 2.0);
    });
    return out;
}

} // namespace beltrami
