// differences.hpp — difference-characterized norms for compactly supported
// fields.
//
//   Δ^M_h f(x) = Σ_j (M choose j)(-1)^{M-j} f(x + jh)          (iterated difference)
//   d^M_t f(x) = t^{-2} ∫_{|h|≤t} |Δ^M_h f(x)| dh              (local average)
//   w^M_q f(x) = ( ∫_0^1 d^M_t f(x)^q  t^{-sq-1} dt )^{1/q}
//
// and the equivalent norm  ‖f‖ ≈ ‖f‖_{L^p} + ‖f‖_{L^p̄} + ‖w^M_q f‖_{L^p}
// with p̄ = max(1, p).  Discretization (fixed, reproducible):
//   * t on 48 log-uniform nodes in [spacing, 1], trapezoid in log t;
//   * the h-average over |h| ≤ t by a fixed 64-point Hammersley pattern
//     scaled by t (d_t = π · pattern mean, the disk has area πt²);
//   * off-lattice samples by periodic bilinear interpolation.

#pragma once

#include "beltrami/norms.hpp"

namespace beltrami {

namespace detail {

/// Periodic bilinear sample of f at every lattice point shifted by a fixed
/// complex displacement: out[i] = f(z_i + shift).
inline GridField shifted_bilinear(const GridField& f, Complex shift) {
    const Grid& g = f.grid;
    const int n = g.n;
    const double gx = shift.real() / g.spacing;
    const double gy = shift.imag() / g.spacing;
    const int ox = static_cast<int>(std::floor(gx));
    const int oy = static_cast<int>(std::floor(gy));
    const double fx = gx - ox, fy = gy - oy;
    const double w00 = (1 - fx) * (1 - fy), w10 = fx * (1 - fy);
    const double w01 = (1 - fx) * fy, w11 = fx * fy;
    auto wrap = [n](int v) { return ((v % n) + n) % n; };
    GridField out(g);
    for (int k = 0; k < n; ++k) {
        const int k0 = wrap(k + oy), k1 = wrap(k + oy + 1);
        for (int j = 0; j < n; ++j) {
            const int j0 = wrap(j + ox), j1 = wrap(j + ox + 1);
            out.values[g.index(j, k)] =
                w00 * f.values[g.index(j0, k0)] + w10 * f.values[g.index(j1, k0)] +
                w01 * f.values[g.index(j0, k1)] + w11 * f.values[g.index(j1, k1)];
        }
    }
    return out;
}

inline long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Fixed 64-point Hammersley pattern in the closed unit disk.
inline const std::vector<Complex>& disk_pattern() {
    static const std::vector<Complex> pts = [] {
        std::vector<Complex> out;
        const int m = 64;
        out.reserve(m);
        for (int i = 0; i < m; ++i) {
            // radical inverse base 2
            double x = 0.0, f = 0.5;
            for (int v = i; v; v >>= 1, f *= 0.5)
                if (v & 1) x += f;
            const double r = std::sqrt((i + 0.5) / m);
            const double th = 2.0 * 3.14159265358979323846 * x;
            out.emplace_back(r * std::cos(th), r * std::sin(th));
        }
        return out;
    }();
    return pts;
}

} // namespace detail

/// M-th iterated forward difference with complex displacement h.
inline GridField iterated_difference(const GridField& f, Complex h, int M) {
    if (M < 1) throw std::invalid_argument("iterated_difference: M must be at least 1");
    GridField out(f.grid);
    for (int j = 0; j <= M; ++j) {
        const double c = static_cast<double>(detail::binomial(M, j)) *
                         ((M - j) % 2 == 0 ? 1.0 : -1.0);
        const GridField term =
            j == 0 ? f : detail::shifted_bilinear(f, static_cast<double>(j) * h);
        for (int i = 0; i < f.size(); ++i) out.values[i] += c * term.values[i];
    }
    return out;
}

inline NormReport difference_norm(const GridField& f, const SobolevIndex& idx, int M) {
    if (!(M > idx.s))
        throw std::invalid_argument("difference_norm: requires M > s");
    if (!(idx.s > 0.0))
        throw std::invalid_argument("difference_norm: requires s > 0");
    if (idx.q_infinite() || std::isinf(idx.p))
        throw std::invalid_argument("difference_norm: p, q must be finite");
    const Grid& g = f.grid;
    const int nt = 48;
    const double t_lo = g.spacing, t_hi = 1.0;
    const auto& pattern = detail::disk_pattern();

    NormReport rep;
    rep.kind = NormKind::difference;
    rep.index = idx;

    // integrand_i(x) = d_t(x)^q · t^{-sq}  at node t_i  (w.r.t. d log t)
    std::vector<double> logts(nt);
    for (int i = 0; i < nt; ++i)
        logts[i] = std::log(t_lo) + (std::log(t_hi) - std::log(t_lo)) * i / (nt - 1);

    std::vector<double> wq_pow(f.size(), 0.0);
    std::vector<double> prev_integrand;
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < nt; ++i) {
        const double t = std::exp(logts[i]);
        std::vector<double> acc(f.size(), 0.0);
        for (const Complex& u : pattern) {
            const GridField d = iterated_difference(f, t * u, M);
            for (int x = 0; x < f.size(); ++x) acc[x] += std::abs(d.values[x]);
        }
        std::vector<double> integrand(f.size());
        const double tw = std::pow(t, -idx.s * idx.q);
        for (int x = 0; x < f.size(); ++x) {
            const double dt = pi * acc[x] / static_cast<double>(pattern.size());
            integrand[x] = std::pow(dt, idx.q) * tw;
        }
        double node_mass = 0.0;
        if (i > 0) {
            const double dlog = logts[i] - logts[i - 1];
            for (int x = 0; x < f.size(); ++x) {
                const double piece = 0.5 * (prev_integrand[x] + integrand[x]) * dlog;
                wq_pow[x] += piece;
                node_mass += piece;
            }
        }
        rep.band_contributions.emplace_back(i, node_mass);
        prev_integrand = std::move(integrand);
    }

    GridField w(g);
    for (int x = 0; x < f.size(); ++x) w.values[x] = std::pow(wq_pow[x], 1.0 / idx.q);
    const double lp = lp_norm(f, idx.p);
    const double lp_bar = lp_norm(f, std::max(1.0, idx.p));
    rep.total = lp + lp_bar + lp_norm(w, idx.p);
    return rep;
}

} // namespace beltrami
