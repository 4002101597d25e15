// spectral.hpp — Fourier-multiplier operators on the periodic grid.
//
// With the transform pair f̂(ξ) = ∫ f(z) e^{-2πi Re(ξ̄ z)} dA(z) and the
// Wirtinger derivatives ∂ = (∂_x - i∂_y)/2, ∂̄ = (∂_x + i∂_y)/2, a plane
// wave e^{2πi Re(ξ̄ z)} is an eigenfunction of every operator here:
//
//   ∂      ↦ πi ξ̄           ∂̄     ↦ πi ξ
//   B      ↦ ξ̄/ξ            (Beurling transform, kernel -1/(πz²), |m|=1)
//   B*     ↦ ξ/ξ̄            (conjugate Beurling, inverse of B off DC)
//   C      ↦ 1/(πi ξ)        (Cauchy transform, solid inverse of ∂̄)
//   D^s    ↦ |ξ|^s           (fractional derivative, s ≥ 0)
//
// The grid carries lattice frequencies ξ = (m_j + i m_k)/(2L) with integers
// m ∈ [-n/2, n/2).  Two conventions, fixed once here:
//   * DC mode: symbols singular or undefined at ξ=0 take the spec's dc_value
//     (0 by default), so B acts on the mean-zero part and C inverts ∂̄ off
//     constants; the removed mean is reported where it matters.
//   * Unpaired Nyquist rows (m = -n/2): symbols that are not real and even
//     are zeroed there, preserving conjugate-symmetry for real inputs.

#pragma once

#include <functional>
#include <optional>

#include "beltrami/fft.hpp"
#include "beltrami/grid.hpp"

namespace beltrami {

struct FrequencyLattice {
    Grid grid;
    std::vector<Complex> frequencies; // ξ_{jk}, same layout as GridField

    static FrequencyLattice make(const Grid& g) {
        FrequencyLattice lat;
        lat.grid = g;
        lat.frequencies.resize(g.size());
        const double inv2L = 1.0 / (2.0 * g.half_side);
        for (int k = 0; k < g.n; ++k) {
            const int mk = int_freq(k, g.n);
            for (int j = 0; j < g.n; ++j) {
                const int mj = int_freq(j, g.n);
                lat.frequencies[g.index(j, k)] = Complex(mj * inv2L, mk * inv2L);
            }
        }
        return lat;
    }

    // FFT-ordering index -> integer mode in [-n/2, n/2)
    static int int_freq(int idx, int n) { return idx < n / 2 ? idx : idx - n; }

    static bool is_nyquist(int idx, int n) { return idx == n / 2; }
};

enum class MultiplierKind { beurling, conjugate_beurling, cauchy, fractional, dbar, dz };

struct MultiplierSpec {
    MultiplierKind kind = MultiplierKind::fractional;
    double order = 0.0;       // s, for fractional only
    Complex dc_value{0.0, 0.0};

    static MultiplierSpec beurling() { return {MultiplierKind::beurling, 0.0, {0.0, 0.0}}; }
    static MultiplierSpec conjugate_beurling() {
        return {MultiplierKind::conjugate_beurling, 0.0, {0.0, 0.0}};
    }
    static MultiplierSpec cauchy() { return {MultiplierKind::cauchy, 0.0, {0.0, 0.0}}; }
    static MultiplierSpec dbar() { return {MultiplierKind::dbar, 0.0, {0.0, 0.0}}; }
    static MultiplierSpec dz() { return {MultiplierKind::dz, 0.0, {0.0, 0.0}}; }
    static MultiplierSpec fractional(double s) {
        if (s < 0.0) throw std::invalid_argument("fractional multiplier requires s >= 0");
        // |ξ|^0 = 1 everywhere, so D^0 is the identity including at DC.
        return {MultiplierKind::fractional, s, s == 0.0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0}};
    }

    // Real, even symbols keep their Nyquist values; everything else is
    // zeroed on the unpaired rows.
    bool real_even_symbol() const { return kind == MultiplierKind::fractional; }

    Complex symbol(Complex xi) const {
        const double pi = 3.14159265358979323846;
        switch (kind) {
            case MultiplierKind::beurling: return std::conj(xi) / xi;
            case MultiplierKind::conjugate_beurling: return xi / std::conj(xi);
            case MultiplierKind::cauchy: return 1.0 / (Complex{0.0, pi} * xi);
            case MultiplierKind::dbar: return Complex{0.0, pi} * xi;
            case MultiplierKind::dz: return Complex{0.0, pi} * std::conj(xi);
            case MultiplierKind::fractional:
                return {order == 0.0 ? 1.0 : std::pow(std::abs(xi), order), 0.0};
        }
        return {0.0, 0.0};
    }
};

/// Pointwise multiplication of the spectrum by m(ξ); m(0) := spec.dc_value.
inline GridField apply_multiplier(const GridField& f, const MultiplierSpec& spec) {
    const Grid& g = f.grid;
    GridField spec_f = forward_fft(f);
    const double inv2L = 1.0 / (2.0 * g.half_side);
    const bool keep_nyquist = spec.real_even_symbol();
    for (int k = 0; k < g.n; ++k) {
        const bool ny_k = FrequencyLattice::is_nyquist(k, g.n);
        const int mk = FrequencyLattice::int_freq(k, g.n);
        for (int j = 0; j < g.n; ++j) {
            const int idx = g.index(j, k);
            if (j == 0 && k == 0) {
                spec_f.values[idx] *= spec.dc_value;
                continue;
            }
            if (!keep_nyquist && (ny_k || FrequencyLattice::is_nyquist(j, g.n))) {
                spec_f.values[idx] = 0.0;
                continue;
            }
            const int mj = FrequencyLattice::int_freq(j, g.n);
            spec_f.values[idx] *= spec.symbol(Complex(mj * inv2L, mk * inv2L));
        }
    }
    return inverse_fft(spec_f);
}

inline GridField beurling(const GridField& f) {
    return apply_multiplier(f, MultiplierSpec::beurling());
}

inline GridField conjugate_beurling(const GridField& f) {
    return apply_multiplier(f, MultiplierSpec::conjugate_beurling());
}

inline GridField fractional_derivative(const GridField& f, double s) {
    return apply_multiplier(f, MultiplierSpec::fractional(s));
}

inline GridField dbar(const GridField& f) { return apply_multiplier(f, MultiplierSpec::dbar()); }
inline GridField dz(const GridField& f) { return apply_multiplier(f, MultiplierSpec::dz()); }

struct CauchyDiagnostics {
    Complex removed_mean{0.0, 0.0};
    bool support_warning = false; // field not concentrated inside |z| < L/2
};

/// Solid Cauchy transform, the inverse of ∂̄ off constants.  The DC mode is
/// removed (∂̄ is not invertible on constants on the torus); callers
/// comparing against the free-space transform add back mean(f)·z̄ plus a
/// constant fixed by symmetry.
inline GridField cauchy(const GridField& f, CauchyDiagnostics* diag = nullptr) {
    if (diag) {
        diag->removed_mean = mean(f);
        // mass fraction outside |z| < L/2
        double outside = 0.0, total = 0.0;
        const Grid& g = f.grid;
        for (int k = 0; k < g.n; ++k)
            for (int j = 0; j < g.n; ++j) {
                const double a = std::norm(f.values[g.index(j, k)]);
                total += a;
                if (std::abs(g.point(j, k)) >= 0.5 * g.half_side) outside += a;
            }
        diag->support_warning = total > 0.0 && outside > 1e-6 * total;
    }
    return apply_multiplier(f, MultiplierSpec::cauchy());
}

/// Zero the DC mode.
inline GridField remove_mean(const GridField& f) {
    GridField out = f;
    const Complex m = mean(f);
    for (Complex& v : out.values) v -= m;
    return out;
}

/// Project out the unpaired Nyquist rows (m_j or m_k equal to -n/2).
inline GridField drop_nyquist(const GridField& f) {
    GridField spec_f = forward_fft(f);
    const int n = f.grid.n;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            if (j == n / 2 || k == n / 2) spec_f.values[f.grid.index(j, k)] = 0.0;
    return inverse_fft(spec_f);
}

// ---- dealiased product -----------------------------------------------------
//
// Pointwise products of grid samples alias: the spectra convolve circularly,
// so the spectral Leibniz rule ∂(fg) = f∂g + g∂f only holds approximately.
// The dealiased product evaluates the product of the two trigonometric
// interpolants exactly on a 2n grid and truncates back, then projects out
// the Nyquist rows.  On the resulting (Nyquist-free) fields the product
// rule is exact discrete algebra.  Used by the s>1 identity diagnostics.

namespace detail {

inline std::vector<Complex> pad_spectrum(const std::vector<Complex>& F, int n) {
    const int N = 2 * n, hn = n / 2;
    std::vector<Complex> G(static_cast<std::size_t>(N) * N, Complex{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        const int kk = k < hn ? k : N - n + k;
        for (int j = 0; j < n; ++j) {
            const int jj = j < hn ? j : N - n + j;
            G[static_cast<std::size_t>(kk) * N + jj] = F[static_cast<std::size_t>(k) * n + j];
        }
    }
    return G;
}

inline std::vector<Complex> truncate_spectrum(const std::vector<Complex>& G, int n) {
    const int N = 2 * n, hn = n / 2;
    std::vector<Complex> F(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        const int kk = k < hn ? k : N - n + k;
        for (int j = 0; j < n; ++j) {
            const int jj = j < hn ? j : N - n + j;
            F[static_cast<std::size_t>(k) * n + j] = G[static_cast<std::size_t>(kk) * N + jj];
        }
    }
    return F;
}

} // namespace detail

inline GridField dealiased_product(const GridField& a, const GridField& b) {
    check_same_grid(a, b, "dealiased_product");
    const Grid& g = a.grid;
    const int n = g.n, N = 2 * n;
    Grid big = g;
    big.n = N;
    big.spacing = g.spacing / 2.0;

    GridField fa = forward_fft(a), fb = forward_fft(b);
    GridField pa(big, detail::pad_spectrum(fa.values, n));
    GridField pb(big, detail::pad_spectrum(fb.values, n));
    GridField sa = inverse_fft(pa), sb = inverse_fft(pb);
    // the zero-padded inverse carries 1/N^2; restore sample values
    for (int i = 0; i < sa.size(); ++i) sa.values[i] = 4.0 * sa.values[i] * (4.0 * sb.values[i]);
    GridField prod_spec = forward_fft(sa);
    for (Complex& v : prod_spec.values) v *= 0.25;
    GridField out_spec(g, detail::truncate_spectrum(prod_spec.values, n));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            if (j == n / 2 || k == n / 2) out_spec.values[g.index(j, k)] = 0.0;
    return inverse_fft(out_spec);
}

// ---- discrete convolution ----------------------------------------------
//
// (f ∗ g)(z_i) = spacing² Σ_j f(z_j) g(z_i - z_j), evaluated spectrally.
// This is the Riemann-sum discretization of the continuum convolution;
// Young's inequality holds for it exactly.

inline GridField convolve(const GridField& f, const GridField& g) {
    check_same_grid(f, g, "convolve");
    GridField F = forward_fft(f), G = forward_fft(g);
    const double cell = f.grid.spacing * f.grid.spacing;
    for (int i = 0; i < F.size(); ++i) F.values[i] *= G.values[i] * cell;
    return inverse_fft(F);
}

} // namespace beltrami
