// grid.hpp — periodic-grid discretization of the plane.
//
// The computational domain is the square torus [-L, L)^2 sampled on an
// n x n lattice (n a power of two).  A GridField stores complex samples
// row-major with the real axis fastest:
//
//   values[k*n + j]  =  f(z_{jk}),   z_{jk} = (-L + j*spacing) + i(-L + k*spacing)
//
// Coefficients live in the unit disk, so L > 1 is required; the default
// L = 4 keeps the periodic images of the singular kernels far away.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace beltrami {

using Complex = std::complex<double>;

struct Grid {
    int n = 0;            // samples per axis, power of two
    double half_side = 0; // L; the grid covers [-L, L)^2
    double spacing = 0;   // 2L/n

    int size() const { return n * n; }
    int index(int j, int k) const { return k * n + j; }

    // Sample coordinate along one axis; always computed the same way so
    // coordinates are reproducible bit-exactly from (j, k).
    double coord(int idx) const { return -half_side + idx * spacing; }

    Complex point(int j, int k) const { return {coord(j), coord(k)}; }

    bool operator==(const Grid& o) const {
        return n == o.n && half_side == o.half_side;
    }
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline Grid make_grid(int n, double half_side) {
    if (!is_power_of_two(n) || n < 16)
        throw std::invalid_argument("make_grid: n must be a power of two >= 16, got " +
                                    std::to_string(n));
    if (!(half_side > 1.0))
        throw std::invalid_argument("make_grid: half_side must exceed 1 (coefficients live in the unit disk)");
    Grid g;
    g.n = n;
    g.half_side = half_side;
    g.spacing = 2.0 * half_side / n;
    return g;
}

struct GridField {
    Grid grid;
    std::vector<Complex> values;

    GridField() = default;
    explicit GridField(const Grid& g) : grid(g), values(g.size(), Complex{0.0, 0.0}) {}
    GridField(const Grid& g, std::vector<Complex> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != g.size())
            throw std::invalid_argument("GridField: values length must equal n^2");
    }

    Complex& at(int j, int k) { return values[grid.index(j, k)]; }
    const Complex& at(int j, int k) const { return values[grid.index(j, k)]; }
    int size() const { return grid.size(); }
};

// Fill from a callable z -> value, sampled at the lattice points.
template <typename F>
GridField sample_field(const Grid& g, F&& f) {
    GridField out(g);
    for (int k = 0; k < g.n; ++k) {
        const double y = g.coord(k);
        for (int j = 0; j < g.n; ++j)
            out.values[g.index(j, k)] = f(Complex{g.coord(j), y});
    }
    return out;
}

inline void check_same_grid(const GridField& a, const GridField& b, const char* who) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument(std::string(who) + ": fields live on different grids");
}

// ---- discrete norms (Riemann sums with cell weight spacing^2) ----

inline double l2_norm(const GridField& f) {
    double acc = 0.0;
    for (const Complex& v : f.values) acc += std::norm(v);
    return std::sqrt(acc) * f.grid.spacing;
}

inline double lp_norm(const GridField& f, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const Complex& v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    for (const Complex& v : f.values) acc += std::pow(std::abs(v), p);
    const double cell = f.grid.spacing * f.grid.spacing;
    return std::pow(acc * cell, 1.0 / p);
}

inline double sup_norm(const GridField& f) {
    double m = 0.0;
    for (const Complex& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

inline Complex mean(const GridField& f) {
    Complex acc{0.0, 0.0};
    for (const Complex& v : f.values) acc += v;
    return acc / static_cast<double>(f.size());
}

inline bool all_finite(const GridField& f) {
    for (const Complex& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

// ---- pointwise field algebra ----

inline GridField operator+(const GridField& a, const GridField& b) {
    check_same_grid(a, b, "operator+");
    GridField out(a.grid);
    for (int i = 0; i < a.size(); ++i) out.values[i] = a.values[i] + b.values[i];
    return out;
}

inline GridField operator-(const GridField& a, const GridField& b) {
    check_same_grid(a, b, "operator-");
    GridField out(a.grid);
    for (int i = 0; i < a.size(); ++i) out.values[i] = a.values[i] - b.values[i];
    return out;
}

// Pointwise product of samples (the solver's product; see solver.hpp).
inline GridField operator*(const GridField& a, const GridField& b) {
    check_same_grid(a, b, "operator*");
    GridField out(a.grid);
    for (int i = 0; i < a.size(); ++i) out.values[i] = a.values[i] * b.values[i];
    return out;
}

inline GridField operator*(Complex c, const GridField& a) {
    GridField out(a.grid);
    for (int i = 0; i < a.size(); ++i) out.values[i] = c * a.values[i];
    return out;
}

inline GridField operator*(double c, const GridField& a) { return Complex{c, 0.0} * a; }

inline GridField conj(const GridField& a) {
    GridField out(a.grid);
    for (int i = 0; i < a.size(); ++i) out.values[i] = std::conj(a.values[i]);
    return out;
}

inline GridField abs(const GridField& a) {
    GridField out(a.grid);
    for (int i = 0; i < a.size(); ++i) out.values[i] = std::abs(a.values[i]);
    return out;
}

} // namespace beltrami
